//! Acceptance criteria. Each prints one PASS/FAIL line with its measured
//! time against the pinned limit; every check is exact.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use petrie_cli::format::{Envelope, SweepRecord};
use petrie_core::abacus::{gamma_shift_on_addition, gamma_shift_on_removal};
use petrie_core::modular::transition_matrix;
use petrie_core::oracle::Oracle;
use petrie_core::partition::{
    add_rim_hooks, add_rim_hooks_with_height, partitions_of, remove_rim_hooks,
};
use petrie_core::petrie::{pet_det, pet_generalized, pet_grinberg, pet_rimhook};
use petrie_core::schur::{petrie_schur_expansion, petrie_times_power_sum, verify_witness, Witness};
use petrie_core::{Partition, SchurExpansion};

type Check = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn petrie(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_petrie"))
        .args(args)
        .env_remove("PETRIE_FORMAT")
        .output()
        .expect("binary runs")
}

fn golden_expansions() -> Check {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases = [
        (&["expand", "4", "8"][..], "expand_4_8.txt"),
        (&["expand", "5", "8"], "expand_5_8.txt"),
        (&["multiply", "3", "5", "2"], "multiply_3_5_2.txt"),
        (&["multiply", "3", "5", "3"], "multiply_3_5_3.txt"),
        (&["multiply", "5", "8", "3"], "multiply_5_8_3.txt"),
    ];
    for (args, file) in cases {
        let want = std::fs::read(dir.join(file)).map_err(|e| format!("{file}: {e}"))?;
        let got = petrie(args).stdout;
        if got != want {
            return Err(format!("{} differs from {file}", args.join(" ")));
        }
    }
    Ok(())
}

fn evaluator_agreement() -> Check {
    for k in 1..=7 {
        for m in 0..=12 {
            for lambda in partitions_of(m, None) {
                let det = pet_det(&lambda, k).map_err(|e| e.to_string())?;
                let others = [
                    pet_grinberg(&lambda, k),
                    pet_rimhook(&lambda, k),
                    pet_generalized(&lambda, &Partition::empty(), k),
                ];
                for v in others {
                    if v.map_err(|e| e.to_string())? != det {
                        return Err(format!("{lambda}, k = {k}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn smf_sweep() -> Check {
    let o = petrie(&["sweep", "6", "12", "8", "--json"]);
    if o.status.code() != Some(0) {
        return Err(format!("exit status {:?}", o.status.code()));
    }
    let env: Envelope<SweepRecord> =
        serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
    let report = env.result;
    if report.triples != 6 * 13 * 8 {
        return Err(format!("{} triples", report.triples));
    }
    if !report.disagreements.is_empty() || !report.witness_failures.is_empty() {
        return Err(format!(
            "{} disagreements, {} witness failures",
            report.disagreements.len(),
            report.witness_failures.len()
        ));
    }
    for t in &report.non_smf {
        let w = t
            .witness
            .as_ref()
            .ok_or(format!("({},{},{}) has no witness", t.k, t.m, t.n))?;
        let witness = Witness {
            lambda: p(&w.lambda),
            mu: p(&w.mu),
            lambda_plus: p(&w.lambda_plus),
        };
        verify_witness(t.k, t.m, t.n, &witness).map_err(|e| e.to_string())?;
    }
    println!(
        "      {} non-SMF triples, max |coefficient| {}",
        report.non_smf.len(),
        report.max_abs_coefficient
    );
    Ok(())
}

fn oracle_equivalence() -> Check {
    let mut oracle = Oracle::new();
    for k in 1..=6 {
        for m in 0..=10 {
            let fast = petrie_schur_expansion(k, m).map_err(|e| e.to_string())?;
            if oracle.petrie_expansion(k, m).map_err(|e| e.to_string())? != fast {
                return Err(format!("G({k},{m})"));
            }
        }
    }
    for k in 1..=5 {
        for m in 0..=8 {
            for n in 1..=5 {
                let fast = petrie_times_power_sum(k, m, n).map_err(|e| e.to_string())?;
                if oracle
                    .petrie_times_power_sum(k, m, n)
                    .map_err(|e| e.to_string())?
                    != fast
                {
                    return Err(format!("G({k},{m}) p{n}"));
                }
            }
        }
    }
    Ok(())
}

fn alternating_hooks(k: usize, prefix: &[usize]) -> SchurExpansion {
    let terms = (0..=k - 2).map(|i| {
        let mut parts = prefix.to_vec();
        parts.push(k - 1 - i);
        parts.extend(std::iter::repeat_n(1, i + 1));
        (p(&parts), if i % 2 == 0 { 1 } else { -1 })
    });
    SchurExpansion::from_terms(prefix.iter().sum::<usize>() + k, terms).unwrap()
}

fn liu_polo() -> Check {
    for k in 2..=10 {
        if petrie_schur_expansion(k, k).map_err(|e| e.to_string())? != alternating_hooks(k, &[]) {
            return Err(format!("G({k},{k})"));
        }
        if petrie_schur_expansion(k, 2 * k - 1).map_err(|e| e.to_string())?
            != alternating_hooks(k, &[k - 1])
        {
            return Err(format!("G({k},{})", 2 * k - 1));
        }
    }
    Ok(())
}

fn transition_blocks() -> Check {
    let t = transition_matrix(3, 4).map_err(|e| e.to_string())?;
    let display = [
        p(&[4]),
        p(&[2, 2]),
        p(&[1, 1, 1, 1]),
        p(&[3, 1]),
        p(&[2, 1, 1]),
    ];
    let expected = [
        [0, 1, -1, 0, 0],
        [1, 0, 1, 0, 0],
        [-1, 1, 0, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ];
    for (i, row) in display.iter().enumerate() {
        for (j, col) in display.iter().enumerate() {
            if t.entry(row, col) != Some(expected[i][j]) {
                return Err(format!("entry ({row}, {col})"));
            }
        }
    }
    for k in 1..=5 {
        for m in 0..=9 {
            transition_matrix(k, m).map_err(|e| format!("k = {k}, m = {m}: {e}"))?;
        }
    }
    Ok(())
}

fn parity_and_shift() -> Check {
    for k in 2..=5 {
        for size in 0..=8 {
            for lambda in partitions_of(size, Some(k - 1)) {
                for mu in remove_rim_hooks(&lambda, k) {
                    let s = gamma_shift_on_removal(&lambda, &mu, k)
                        .map_err(|e| format!("{lambda}/{mu}: {e}"))?;
                    if s.gammas_distinct && s.parity != s.expected_parity {
                        return Err(format!("parity of {lambda}/{mu}, k = {k}"));
                    }
                }
                for n in 1..=6 {
                    for plus in add_rim_hooks(&lambda, n)
                        .into_iter()
                        .filter(|q| q.first() < k)
                    {
                        let s = gamma_shift_on_addition(&lambda, &plus, k)
                            .map_err(|e| format!("{plus}/{lambda}: {e}"))?;
                        if n % k == 0 && s.gamma_star != s.replaced {
                            return Err(format!("γ_* of {plus}/{lambda}, k = {k}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn collisions() -> Check {
    for k in 1..=6 {
        for m in 0..=10 {
            let support: Vec<(Partition, i64)> = partitions_of(m, None)
                .into_iter()
                .map(|l| {
                    let v = i64::from(pet_det(&l, k).unwrap());
                    (l, v)
                })
                .filter(|(_, v)| *v != 0)
                .collect();
            for n in 1..=6 {
                let mut hits: BTreeMap<Partition, Vec<i64>> = BTreeMap::new();
                for (lambda, pet) in &support {
                    for (plus, h) in add_rim_hooks_with_height(lambda, n) {
                        hits.entry(plus)
                            .or_default()
                            .push(if h % 2 == 0 { *pet } else { -pet });
                    }
                }
                for (plus, signs) in hits {
                    let at = || format!("k = {k}, m = {m}, n = {n}, {plus}");
                    if plus.first() >= k {
                        if signs.len() != 1 {
                            return Err(format!(
                                "wide shape with {} preimages: {}",
                                signs.len(),
                                at()
                            ));
                        }
                    } else if k >= 3 {
                        let ratio = if n % k == 0 { 1 } else { -1 };
                        for (i, a) in signs.iter().enumerate() {
                            if signs[i + 1..].iter().any(|b| *a != ratio * b) {
                                return Err(format!("sign pattern {signs:?}: {}", at()));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 golden expansions", 1, golden_expansions),
        ("2 Petrie evaluator agreement", 30, evaluator_agreement),
        ("3 signed multiplicity free sweep 6 12 8", 300, smf_sweep),
        ("4 oracle equivalence", 180, oracle_equivalence),
        ("5 hook-shape identities", 5, liu_polo),
        ("6 transition matrix and blocks", 120, transition_blocks),
        ("7 parity and cyclic shift laws", 60, parity_and_shift),
        ("8 collision uniqueness and cancellation", 120, collisions),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        let status = if result.is_ok() && !over {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "{status} {name} ({:.2} s, limit {limit} s)",
            elapsed.as_secs_f64()
        );
        if let Err(e) = result {
            println!("      {e}");
        }
        if over {
            println!("      time limit exceeded");
        }
        failed += usize::from(status == "FAIL");
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
