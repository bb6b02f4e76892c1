//! Acceptance criteria, one printed PASS/FAIL line each.
//!
//! All arithmetic is exact, so every comparison has zero tolerance. Runtime
//! bounds are wall-clock limits for an optimised test build.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clifgeom::cli::cli_main;
use clifgeom::clifford::{
    blade_mul, embed_super_tensor, parity, sign_eps, sign_eps_bruteforce, BladeIndex, Sign,
    SignedBlade,
};
use clifgeom::gf2::enumerate_subspaces;
use clifgeom::io::{parse_incidence, to_canonical_json};
use clifgeom::pauli::{GaussInt, PauliLabel, Representation};
use clifgeom::projgeom::{desargues_check, lie_closure_check, DesarguesConfig, DesarguesOutcome};

const SEED: u64 = 0x5eed;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

/// Runs the CLI in-process and returns `(exit code, stdout)`.
fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("clifgeom").chain(args.iter().copied());
    let code = cli_main(argv, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn fano_counts() -> Outcome {
    let (code, text) = run(&["pg", "--m", "3", "--counts"]);
    let counts = text.contains("points=7 lines=7");
    let degree = text.contains("lines_per_point=3");
    // Also check the degree on the built geometry, not just the printed summary.
    let g = clifgeom::projgeom::build_pg(3, 12).unwrap();
    let every = (0..7).all(|p| g.lines_through(p).len() == 3);
    ok(
        code == 0 && counts && degree && every,
        format!("exit {code}, {}", text.trim().replace('\n', ", ")),
    )
}

fn projective_axioms() -> Outcome {
    let mut notes = Vec::new();
    let mut passed = true;
    for k in 2..=5 {
        let m = k.to_string();
        let (code, text) = run(&["axioms", "--m", &m, "--exhaustive"]);
        passed &= code == 0 && text.contains("(exhaustive)");
        notes.push(format!("m={k}: exit {code}"));
    }
    let seed = SEED.to_string();
    let (code, text) = run(&["axioms", "--m", "6", "--samples", "1000000", "--seed", &seed]);
    passed &= code == 0 && text.contains("1000000 quadruples checked, 0 violations");
    notes.push(format!("m=6 sampled 10^6: exit {code}"));
    ok(passed, notes.join("; "))
}

fn desargues_search() -> Outcome {
    let mut notes = Vec::new();
    let mut passed = true;
    for m in ["3", "4"] {
        let (code, text) = run(&["desargues", "--m", m]);
        passed &= code == 0 && text.contains("0 counterexamples") && text.contains("degenerate skipped");
        notes.push(format!("m={m}: {}", text.lines().next().unwrap_or_default()));
    }
    ok(passed, notes.join("; "))
}

fn cl3xcl3_fixture() -> Outcome {
    let path = fixture("desargues_cl3xcl3.json");
    let doc = parse_incidence(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let g = doc.to_geometry().unwrap();
    let pt = |key: &str| doc.resolve_point(key).unwrap();
    let cfg = DesarguesConfig {
        center: pt("1,2"),
        triangle: [pt("1,4"), pt("1,5"), pt("1,6")],
        perspective: [pt("2,4"), pt("2,5"), pt("2,6")],
    };
    let axis = match desargues_check(&g, &cfg) {
        Ok(DesarguesOutcome::Axis(a)) => a,
        other => return ok(false, format!("no axis: {other:?}")),
    };
    // Axis labels in the usual Pauli notation, compared up to the order of σ factors.
    let want = ["I⊗σ₂σ₁", "I⊗σ₃σ₂", "I⊗σ₃σ₁"].map(|s| s.parse::<PauliLabel>().unwrap());
    let got = [axis.f, axis.g, axis.h].map(|p| {
        clifgeom::pauli::label_blade_as_pauli(g.blade(p).unwrap(), 2).unwrap()
    });
    let blades: Vec<BladeIndex> = (0..g.num_points()).map(|p| g.blade(p).unwrap()).collect();
    let lie = lie_closure_check(&blades, 6).unwrap();
    let (code, _) = run(&["lie-check", "--file", &path]);
    ok(
        got == want && lie.passed && code == 0,
        format!(
            "axis {} | {} | {}; lie closure over {} pairs",
            got[0], got[1], got[2], lie.pairs_checked
        ),
    )
}

fn isomorphism() -> Outcome {
    let mut failed = Vec::new();
    for k in 1..=8 {
        let (code, _) = run(&["iso-check", "--m", &k.to_string()]);
        if code != 0 {
            failed.push(k);
        }
    }
    ok(failed.is_empty(), format!("m=1..8, failures at {failed:?}"))
}

fn lie_closure_of_subspaces() -> Outcome {
    let mut total = 0usize;
    let mut exceptions = 0usize;
    for m in 1..=5 {
        for k in 1..=m {
            for u in enumerate_subspaces(m, k, 6).unwrap() {
                let xs: Vec<BladeIndex> = u
                    .nonzero_elements()
                    .map(|v| BladeIndex::new(v.bits(), m).unwrap())
                    .collect();
                total += 1;
                if !lie_closure_check(&xs, m).unwrap().passed {
                    exceptions += 1;
                }
            }
        }
    }
    ok(exceptions == 0, format!("{total} subspaces for m<=5, {exceptions} exceptions"))
}

fn sign_rule() -> Outcome {
    // (-1)^{|S||T| - |S∩T|} as a Sign.
    let law = |s: BladeIndex, t: BladeIndex| {
        let n = s.grade() * t.grade() + (s.bits() & t.bits()).count_ones();
        Sign::from_parity(n)
    };
    let mut pairs = 0u64;
    let mut bad = 0u64;
    for m in 0..=10 {
        let all: Vec<BladeIndex> = BladeIndex::all(m).unwrap().collect();
        for &s in &all {
            for &t in &all {
                pairs += 1;
                let fast = sign_eps(s, t);
                if fast != sign_eps_bruteforce(s, t) || fast * sign_eps(t, s) != law(s, t) {
                    bad += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mask = (1u64 << 62) - 1;
    for _ in 0..100_000 {
        let s = BladeIndex::new(rng.gen::<u64>() & mask, 62).unwrap();
        let t = BladeIndex::new(rng.gen::<u64>() & mask, 62).unwrap();
        pairs += 1;
        let fast = sign_eps(s, t);
        if fast != sign_eps_bruteforce(s, t) || fast * sign_eps(t, s) != law(s, t) {
            bad += 1;
        }
    }
    ok(bad == 0, format!("{pairs} pairs, {bad} mismatches"))
}

fn super_tensor() -> Outcome {
    let basis: Vec<(SignedBlade, SignedBlade)> = BladeIndex::all(3)
        .unwrap()
        .flat_map(|x| BladeIndex::all(3).unwrap().map(move |y| (x, y)))
        .map(|(x, y)| (SignedBlade::plus(x), SignedBlade::plus(y)))
        .collect();
    let mut pairs = 0;
    let mut bad = 0;
    for &(x, y) in &basis {
        for &(z, w) in &basis {
            pairs += 1;
            let lhs = blade_mul(
                embed_super_tensor(x, y).unwrap(),
                embed_super_tensor(z, w).unwrap(),
            )
            .unwrap();
            let mut rhs = embed_super_tensor(blade_mul(x, z).unwrap(), blade_mul(y, w).unwrap())
                .unwrap();
            if parity(y.index) * parity(z.index) == 1 {
                rhs = -rhs;
            }
            if lhs != rhs {
                bad += 1;
            }
        }
    }
    ok(pairs == 4096 && bad == 0, format!("{pairs} pairs, {bad} mismatches"))
}

fn representation_facts() -> Outcome {
    let mut notes = Vec::new();
    let mut passed = true;
    for k in 1..=11u32 {
        let (code, text) = run(&["rep-verify", "--m", &k.to_string(), "--seed", &SEED.to_string()]);
        let odd_small = k % 2 == 1 && k <= 9;
        passed &= code == 0;
        if odd_small {
            let want = format!("rank {}, full matrix algebra {}", 1u64 << (k - 1), 1u64 << (k - 1));
            passed &= text.contains(&want) && text.contains("PASS two inequivalent irreps");
        }
        passed &= text.contains(if k <= 7 { "(exhaustive)" } else { "(sampled" });
        if code != 0 {
            notes.push(format!("m={k} exit {code}"));
        }
    }
    // Top-blade scalars by direct multiplication of the generator matrices.
    for k in [1u32, 3, 5, 7, 9] {
        let rho = Representation::jordan_wigner(k, 13).unwrap();
        let sigma = rho.with_last_negated();
        let mut a = rho.generator(1).clone();
        let mut b = sigma.generator(1).clone();
        for j in 2..=k {
            a = a.mul(rho.generator(j)).unwrap();
            b = b.mul(sigma.generator(j)).unwrap();
        }
        let (la, lb) = (a.as_scalar(), b.as_scalar());
        let opposite = matches!((&la, &lb), (Some(x), Some(y)) if *x == -y.clone() && !x.is_zero());
        passed &= opposite;
        if k == 3 {
            passed &= la == Some(GaussInt::i()) && lb == Some(-GaussInt::i());
            notes.push(format!(
                "m=3 top blade {} / {}",
                la.map(|x| x.to_string()).unwrap_or_default(),
                lb.map(|x| x.to_string()).unwrap_or_default()
            ));
        }
    }
    ok(passed, format!("m=1..11; {}", notes.join("; ")))
}

fn io_contract() -> Outcome {
    let mut notes = Vec::new();
    let mut passed = true;
    for name in ["fano.json", "broken.json", "desargues_cl3xcl3.json"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let same = parse_incidence(&text).map(|d| to_canonical_json(&d) == text);
        passed &= same == Ok(true);
        notes.push(format!("{name} round-trip {}", if same == Ok(true) { "exact" } else { "differs" }));
    }
    let fano = fixture("fano.json");
    let broken = fixture("broken.json");
    let malformed = fixture("malformed.json");
    let cases = [
        (["axioms", "--file", fano.as_str()], 0),
        (["axioms", "--file", broken.as_str()], 1),
        (["axioms", "--file", malformed.as_str()], 2),
        (["axioms", "--m", "20"], 3),
    ];
    let mut codes = Vec::new();
    for (args, want) in cases {
        let (code, _) = run(&args);
        passed &= code == want;
        codes.push(code);
    }
    notes.push(format!("exit codes {codes:?}"));
    ok(passed, notes.join("; "))
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 10] = [
        (1, "Fano counts", fano_counts, Duration::from_secs(1)),
        (2, "projective axioms", projective_axioms, Duration::from_secs(30)),
        (3, "Desargues search", desargues_search, Duration::from_secs(120)),
        (4, "Cl3 x Cl3 Desargues fixture", cl3xcl3_fixture, Duration::from_secs(1)),
        (5, "blade geometry isomorphism", isomorphism, Duration::from_secs(30)),
        (6, "Lie closure of subspaces", lie_closure_of_subspaces, Duration::from_secs(60)),
        (7, "sign rule", sign_rule, Duration::from_secs(60)),
        (8, "super tensor rule", super_tensor, Duration::from_secs(1)),
        (9, "representation facts", representation_facts, Duration::from_secs(120)),
        (10, "IO contract", io_contract, Duration::from_secs(10)),
    ];
    let mut failed = Vec::new();
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let passed = outcome.passed && in_time;
        // Written to the stderr handle directly so the line shows without
        // `--nocapture`.
        let _ = writeln!(
            std::io::stderr(),
            "{} criterion {id:>2} {name}: {} [{:.3}s, limit {}s]",
            if passed { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        if !passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
