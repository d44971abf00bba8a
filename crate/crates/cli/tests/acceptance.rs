//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so every line is printed; exits nonzero if any criterion fails.

use std::panic;
use std::time::{Duration, Instant};

use heron_cli::output::{write_report_json, write_survey_csv};
use heron_cli::parallel::survey_grid;
use heron_cli::scaling::{report_from_records, scaling_report};
use heron_core::arith::{d1, factorize, r2};
use heron_core::heron::{h_count_angles, h_count_oracle, h_upper_bound, is_heron};
use heron_core::prime_case::{
    classify_prime_pair, cor211_check, delta_candidates, equation_values, family_example1, family_prop28,
    lemma25_report, lemma25_verify, prime_decomp, solve_eqs_8_15, thm210_check, thm29_construct, thm29_decompose,
    DeltaCandidate, DeltaVariant, Prop28Outcome,
};
use heron_core::survey::{eq_hits_12_15, multi_solution_search};
use num_rational::Ratio;

fn primes_up_to(n: u64) -> Vec<u64> {
    let mut sieve = vec![true; n as usize + 1];
    let mut out = Vec::new();
    for i in 2..=n as usize {
        if sieve[i] {
            out.push(i as u64);
            for j in (i * i..=n as usize).step_by(i) {
                sieve[j] = false;
            }
        }
    }
    out
}

fn timed<T>(limit: Duration, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    assert!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
    out
}

fn c1_known_triangle() {
    is_heron(5, 1213, 1212).unwrap();
    let start = Instant::now();
    let cert = is_heron(5, 1213, 1212).unwrap().expect("not Heron");
    let elapsed = start.elapsed();
    assert_eq!(cert.area, 2970);
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
}

fn c2_worked_example() {
    let set = solve_eqs_8_15(113, 257).unwrap();
    assert_eq!(set.solved().collect::<Vec<_>>(), vec![(15, 306)]);

    let w = thm29_decompose(7, 8, 1, 16).unwrap().expect("no witness");
    assert_eq!((w.m, w.n, w.a, w.b), (4, 1, 3, 5));
    assert_eq!(w.k, Ratio::new(26, 3));

    let t = thm210_check(&w, 113, 257).unwrap();
    assert_eq!((t.ell, t.s, t.s_prime), (2, 13, 4));
    assert_eq!(370, t.ell * (t.s * t.s + t.s_prime * t.s_prime));

    let c = cor211_check(113, 257).unwrap();
    assert!(c.holds);
    assert_eq!(c.sum, 370);
    assert!(c.reps.iter().any(|r| (r.m, r.k) == (17, 9)));
}

fn c3_delta_242() {
    let cands = delta_candidates(1213, DeltaVariant::Eq9).unwrap();
    assert!(cands.contains(&DeltaCandidate { delta: 242, p: 5, p_is_prime: true }), "{cands:?}");
}

const MULTI: [(u64, u64, [u64; 3]); 5] = [
    (21521, 14969, [14952, 15990, 33448]),
    (4241, 2729, [1530, 1850, 6888]),
    (898361, 161009, [952648, 896952, 870870]),
    (659137, 252913, [512720, 688976, 722610]),
    (4577449, 11893681, [11843832, 14876232, 10174630]),
];

fn c4_multi_solution_lines() {
    for (p, q, xs) in MULTI {
        let solved = solve_eqs_8_15(p, q).unwrap().third_sides();
        for x in xs {
            assert!(is_heron(p, q, x).unwrap().is_some(), "({p}, {q}, {x}) not Heron");
            assert!(solved.contains(&x), "({p}, {q}): {x} not among {solved:?}");
        }
        assert!(eq_hits_12_15(p, q).unwrap() >= 3, "({p}, {q})");
    }
    let found: Vec<(u64, u64)> = multi_solution_search(25000, 3).unwrap().iter().map(|s| (s.p, s.q)).collect();
    for (p, q, _) in &MULTI[..2] {
        assert!(found.contains(&(*p.min(q), *p.max(q))), "scan missed ({p}, {q}): {found:?}");
    }
}

fn c5_classification() {
    timed(Duration::from_secs(60), || {
        let primes: Vec<u64> = primes_up_to(300).into_iter().filter(|&p| p > 2).collect();
        for &p in &primes {
            for &q in &primes {
                let c = classify_prime_pair(p, q).unwrap();
                assert_eq!(c.h, h_count_oracle(p, q).unwrap().count(), "({p}, {q})");
                assert!(c.tag.admits(c.h), "({p}, {q}) H = {} in row {}", c.h, c.tag.as_str());
            }
        }
    });
}

fn c6_angle_equivalence() {
    timed(Duration::from_secs(10), || {
        for a in 3..=60 {
            for b in a..=60 {
                assert_eq!(
                    h_count_angles(a, b).unwrap().third_sides,
                    h_count_oracle(a, b).unwrap().third_sides,
                    "({a}, {b})"
                );
            }
        }
    });
}

fn c7_bounds() {
    for a in 1..=100 {
        for b in a..=100 {
            let h = h_count_oracle(a, b).unwrap().count() as u64;
            let tau = factorize(a * b).unwrap().tau();
            assert_eq!(h_upper_bound(a, b).unwrap(), 4 * tau * tau);
            assert!(h <= (2 * a - 1).min(4 * tau * tau), "H({a}, {b}) = {h}");
        }
    }
}

fn c8_delta_characterization() {
    let primes: Vec<u64> = primes_up_to(2000).into_iter().filter(|&p| p > 2).collect();
    for &q in primes.iter().filter(|&&q| q % 4 == 1) {
        for &p in primes.iter().take_while(|&&p| p <= q) {
            assert!(lemma25_verify(p, q).unwrap(), "({p}, {q})");
            let r = lemma25_report(p, q).unwrap();
            if p != q {
                assert!(!(r.eq8.equation_solvable && r.eq9.equation_solvable), "8 and 9 both solvable at ({p}, {q})");
            }
            if p != q && p % 4 == 1 && q % 4 == 1 {
                let hits = solve_eqs_8_15(p, q).unwrap().hits_in(8..=11);
                assert!(hits <= 1, "{hits} of 8-11 solvable at ({p}, {q})");
            }
        }
    }
}

fn c9_two_squares() {
    for n in 1..=10_000u64 {
        let mut count = 0;
        let mut representable = false;
        for k in 0..=n.isqrt() {
            let rest = n - k * k;
            let m = rest.isqrt();
            if m * m == rest {
                representable = true;
                if k >= 1 && k <= m {
                    count += 1;
                }
            }
        }
        assert_eq!(r2(n).unwrap(), count, "r2({n})");
        assert_eq!(d1(n).unwrap() > 0, representable, "representability of {n}");
    }
}

fn c10_families() {
    let m = family_example1(1, 1).unwrap().expect("no member");
    assert_eq!((m.p, m.q, m.x), (5, 13, 12));

    let Some(Prop28Outcome::Member { p, q, x5, x7, certificates }) = family_prop28(1, 1, 3, 2).unwrap() else {
        panic!("no member");
    };
    assert_eq!((p, q, x5, x7), (37, 13, 40, 30));
    assert_eq!(certificates.map(|c| c.area), [240, 180]);
    assert!(is_heron(p, q, x5).unwrap().is_some() && is_heron(p, q, x7).unwrap().is_some());

    let values = equation_values(p, q, prime_decomp(p).unwrap(), prime_decomp(q).unwrap());
    for x in [x5, x7] {
        let x2 = (x * x) as i128;
        assert!(values.iter().any(|&(eq, v)| (eq == 12 || eq == 14) && v == x2), "x = {x}: {values:?}");
    }
}

fn c11_survey_envelope() {
    let xs = [25, 50, 100, 200];
    let report = timed(Duration::from_secs(300), || scaling_report(&xs, 1).unwrap());
    let exponent = report.exponent.expect("exponent undefined");
    assert!(exponent <= 25.0 / 13.0 + 0.1, "exponent {exponent}");
    assert!(report.zero_fractions.iter().all(|&z| z >= 0.5), "{:?}", report.zero_fractions);

    let serial = survey_grid(200, 1).unwrap();
    let parallel = survey_grid(200, 4).unwrap();
    let (mut a, mut b) = (Vec::new(), Vec::new());
    write_survey_csv(&serial, &mut a).unwrap();
    write_survey_csv(&parallel, &mut b).unwrap();
    assert!(a == b, "CSV differs");
    let (mut a, mut b) = (Vec::new(), Vec::new());
    write_report_json(&report_from_records(&xs, &serial), &mut a).unwrap();
    write_report_json(&report_from_records(&xs, &parallel), &mut b).unwrap();
    assert!(a == b, "JSON differs");
}

fn c12_witness_round_trip() {
    let mut successes = 0;
    for q in primes_up_to(2000).into_iter().filter(|q| q % 4 == 1) {
        let qd = prime_decomp(q).unwrap().unwrap();
        for m in 1..=10 {
            for n in 1..=10 {
                for a in 1..=10 {
                    for b in 1..=10 {
                        let Ok(Some(c)) = thm29_construct(m, n, a, b, qd.u, qd.v) else { continue };
                        if c.u % 2 == 0 || c.v % 2 == 1 {
                            continue;
                        }
                        let w = thm29_decompose(c.u, c.v, qd.u, qd.v).unwrap().expect("not decomposable");
                        assert_eq!((w.m, w.n, w.a, w.b), (m, n, a, b), "q = {q}");
                        successes += 1;
                    }
                }
            }
        }
    }
    assert!(successes > 0);
}

fn main() {
    let criteria: [(&str, fn()); 12] = [
        ("triangle (5, 1213, 1212) has area 2970", c1_known_triangle),
        ("worked example (113, 257)", c2_worked_example),
        ("delta 242 for q = 1213", c3_delta_242),
        ("triple-solution prime pairs", c4_multi_solution_lines),
        ("prime-pair classification, p, q <= 300", c5_classification),
        ("angle enumeration equals window scan, b <= 60", c6_angle_equivalence),
        ("H bounds, b <= 100", c7_bounds),
        ("divisor criterion for equations 8 and 9, q <= 2000", c8_delta_characterization),
        ("two-squares counts, n <= 10^4", c9_two_squares),
        ("parametric families", c10_families),
        ("survey envelope for x in 25, 50, 100, 200", c11_survey_envelope),
        ("witness round trip, q <= 2000", c12_witness_round_trip),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(check);
        let elapsed = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:2} PASS  {name} ({elapsed:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:2} FAIL  {name} ({elapsed:.2}s): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
