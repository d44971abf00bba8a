//! Invariant suites runnable at a chosen scale from the command line.
//!
//! Each check compares the library against a brute-force recount or against
//! an identity it must satisfy, and reports the first counterexample.

use heron_core::arith::{d1, factorize, is_prime, perfect_square, r2, two_square_reps};
use heron_core::heron::{area16_squared, h_count_angles, h_count_oracle, h_upper_bound, is_heron};
use heron_core::prime_case::{
    classify_prime_pair, cor211_check, equation_values, lemma25_report, prime_decomp, pythagorean_forms,
    solve_eqs_8_15, thm210_check, thm29_construct, thm29_decompose,
};
use heron_core::survey::SurveyRecord;
use serde::{Deserialize, Serialize};

use crate::limits::SURVEY_CEILING;
use crate::output::write_survey_csv;
use crate::parallel::survey_grid;
use crate::scaling::report_from_records;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Arith,
    Heron,
    Primecase,
    Survey,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

type Check = fn(u64) -> Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T>(r: heron_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn naive_primes(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect()
}

fn r2_count(n: u64) -> u64 {
    let mut count = 0;
    let mut k = 1;
    while 2 * k * k <= n {
        let rest = n - k * k;
        let m = rest.isqrt();
        if m * m == rest {
            count += 1;
        }
        k += 1;
    }
    count
}

fn representable(n: u64) -> bool {
    (0..=n.isqrt()).any(|k| {
        let rest = n - k * k;
        rest.isqrt().pow(2) == rest
    })
}

fn divisor_count(n: u64) -> u64 {
    (1..=n.isqrt()).filter(|d| n % d == 0).map(|d| if d * d == n { 1 } else { 2 }).sum()
}

fn heron_formula_sides(a: u64, b: u64) -> Vec<u64> {
    (a.abs_diff(b) + 1..a + b)
        .filter(|&c| {
            if (a + b + c) % 2 == 1 {
                return false;
            }
            let s = (a + b + c) / 2;
            let prod = s as u128 * (s - a) as u128 * (s - b) as u128 * (s - c) as u128;
            prod > 0 && prod.isqrt().pow(2) == prod
        })
        .collect()
}

// ---- arithmetic ----

fn arith_r2(max: u64) -> Result<(), String> {
    for n in 1..=max {
        let got = lib(r2(n))?;
        ensure!(got == r2_count(n), "r2({n}) = {got}, scan gives {}", r2_count(n));
    }
    Ok(())
}

fn arith_representable(max: u64) -> Result<(), String> {
    for n in 1..=max {
        ensure!((lib(d1(n))? > 0) == representable(n), "representability of {n}");
    }
    Ok(())
}

fn arith_tau(max: u64) -> Result<(), String> {
    for n in 1..=max {
        let tau = lib(factorize(n))?.tau();
        ensure!(tau == divisor_count(n), "tau({n}) = {tau}");
    }
    Ok(())
}

fn arith_reconstruct(max: u64) -> Result<(), String> {
    for n in 1..=max {
        ensure!(lib(factorize(n))?.value() == Some(n as u128), "factorization of {n}");
    }
    Ok(())
}

fn arith_multiplicative(max: u64) -> Result<(), String> {
    let bound = max.min(1000);
    for m in 1..=bound {
        let fm = lib(factorize(m))?;
        for n in 1..=bound {
            if num_gcd(m, n) != 1 {
                continue;
            }
            let fn_ = lib(factorize(n))?;
            let fmn = lib(factorize(m * n))?;
            ensure!(fmn.tau() == fm.tau() * fn_.tau(), "tau({m}*{n})");
            ensure!(fmn.d1() == fm.d1() * fn_.d1(), "d1({m}*{n})");
        }
    }
    Ok(())
}

fn num_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn arith_squares(max: u64) -> Result<(), String> {
    for r in 0..=max as i128 {
        ensure!(perfect_square(r * r) == Some(r as u128), "{r}^2");
        ensure!(r == 0 || perfect_square(r * r + 1).is_none(), "{r}^2 + 1");
    }
    Ok(())
}

fn arith_reps(max: u64) -> Result<(), String> {
    for n in 1..=max {
        for rep in lib(two_square_reps(n, false))? {
            ensure!(rep.value() == n as u128 && rep.m >= rep.k, "representation {rep:?} of {n}");
        }
    }
    Ok(())
}

// ---- heron ----

fn heron_oracle_formula(max: u64) -> Result<(), String> {
    for a in 1..=max {
        for b in a..=max {
            let got = lib(h_count_oracle(a, b))?.third_sides;
            ensure!(got == heron_formula_sides(a, b), "H({a}, {b}): {got:?}");
        }
    }
    Ok(())
}

fn heron_angles(max: u64) -> Result<(), String> {
    for a in 3..=max {
        for b in a..=max {
            let angles = lib(h_count_angles(a, b))?.third_sides;
            let oracle = lib(h_count_oracle(a, b))?.third_sides;
            ensure!(angles == oracle, "({a}, {b}): angles {angles:?}, oracle {oracle:?}");
        }
    }
    Ok(())
}

fn heron_bounds(max: u64) -> Result<(), String> {
    for a in 1..=max {
        for b in a..=max {
            let h = lib(h_count_oracle(a, b))?.count() as u64;
            let bound = (2 * a - 1).min(lib(h_upper_bound(a, b))?);
            ensure!(h <= bound, "H({a}, {b}) = {h} exceeds {bound}");
        }
    }
    Ok(())
}

fn heron_symmetry(max: u64) -> Result<(), String> {
    for a in 1..=max {
        for b in 1..a {
            ensure!(
                lib(h_count_oracle(a, b))?.third_sides == lib(h_count_oracle(b, a))?.third_sides,
                "H({a}, {b}) != H({b}, {a})"
            );
        }
    }
    Ok(())
}

fn heron_certificates(max: u64) -> Result<(), String> {
    for a in 1..=max {
        for b in a..=max {
            for c in lib(h_count_oracle(a, b))?.third_sides {
                let cert = lib(is_heron(a, b, c))?.ok_or(format!("({a}, {b}, {c}) lost its certificate"))?;
                let s = cert.semiperimeter as i128;
                let area = cert.area as i128;
                ensure!((a + b + c) % 2 == 0, "odd perimeter ({a}, {b}, {c})");
                ensure!(16 * area * area == lib(area16_squared(a, b, c))?, "16S^2 of ({a}, {b}, {c})");
                ensure!(
                    area * area == s * (s - a as i128) * (s - b as i128) * (s - c as i128),
                    "S^2 of ({a}, {b}, {c})"
                );
            }
        }
    }
    Ok(())
}

fn heron_isosceles(max: u64) -> Result<(), String> {
    for p in naive_primes(max).into_iter().filter(|p| p % 4 == 1) {
        let sides = lib(h_count_oracle(p, p))?.third_sides;
        ensure!(sides.len() == 2 && sides.iter().all(|c| c % 2 == 0), "H({p}, {p}) sides {sides:?}");
    }
    Ok(())
}

// ---- prime pairs ----

fn odd_primes(max: u64) -> Vec<u64> {
    naive_primes(max).into_iter().filter(|&p| p > 2).collect()
}

fn split_primes(max: u64) -> Vec<u64> {
    naive_primes(max).into_iter().filter(|p| p % 4 == 1).collect()
}

fn prime_classify(max: u64) -> Result<(), String> {
    let primes = odd_primes(max);
    for &p in &primes {
        for &q in &primes {
            let c = lib(classify_prime_pair(p, q))?;
            let oracle = lib(h_count_oracle(p, q))?.third_sides;
            ensure!(c.third_sides == oracle, "({p}, {q}): {:?} vs oracle {oracle:?}", c.third_sides);
            ensure!(c.tag.admits(c.h), "({p}, {q}): H = {} outside its {} row", c.h, c.tag.as_str());
        }
    }
    Ok(())
}

fn prime_lemma25(max: u64) -> Result<(), String> {
    let primes = odd_primes(max);
    for &q in primes.iter().filter(|q| *q % 4 == 1) {
        for &p in primes.iter().take_while(|&&p| p <= q) {
            let r = lib(lemma25_report(p, q))?;
            ensure!(r.holds(), "({p}, {q}): {r:?}");
        }
    }
    Ok(())
}

fn prime_cor26(max: u64) -> Result<(), String> {
    let primes = odd_primes(max);
    for &q in primes.iter().filter(|q| *q % 4 == 1) {
        for &p in primes.iter().take_while(|&&p| p < q) {
            let r = lib(lemma25_report(p, q))?;
            ensure!(!(r.eq8.equation_solvable && r.eq9.equation_solvable), "({p}, {q}) solves 8 and 9");
        }
    }
    Ok(())
}

fn for_split_pairs(max: u64, mut f: impl FnMut(u64, u64) -> Result<(), String>) -> Result<(), String> {
    let split = split_primes(max);
    for &p in &split {
        for &q in &split {
            if p != q {
                f(p, q)?;
            }
        }
    }
    Ok(())
}

fn prime_cor27(max: u64) -> Result<(), String> {
    for_split_pairs(max, |p, q| {
        let hits = lib(solve_eqs_8_15(p, q))?.hits_in(8..=11);
        ensure!(hits <= 1, "({p}, {q}) solves {hits} of equations 8-11");
        Ok(())
    })
}

fn prime_forms(max: u64) -> Result<(), String> {
    for_split_pairs(max, |p, q| {
        let pd = lib(prime_decomp(p))?.unwrap();
        let qd = lib(prime_decomp(q))?.unwrap();
        let direct: Vec<i128> = equation_values(p, q, Some(pd), Some(qd))[4..].iter().map(|e| e.1).collect();
        ensure!(direct == pythagorean_forms(pd, qd), "({p}, {q}) equations 12-15 differ from their square forms");
        Ok(())
    })
}

fn prime_even_solutions(max: u64) -> Result<(), String> {
    for_split_pairs(max, |p, q| {
        let oracle = lib(h_count_oracle(p, q))?.third_sides;
        for (eq, x) in lib(solve_eqs_8_15(p, q))?.solved() {
            ensure!(x % 2 == 0 && oracle.contains(&x), "({p}, {q}) equation {eq} gives {x}");
        }
        Ok(())
    })
}

fn prime_cor211(max: u64) -> Result<(), String> {
    for_split_pairs(max, |p, q| {
        if lib(solve_eqs_8_15(p, q))?.get(15).is_some() {
            let c = lib(cor211_check(p, q))?;
            ensure!(c.holds && representable(p + q), "({p}, {q}) solves 15 but p + q is not a sum of two squares");
        }
        Ok(())
    })
}

fn prime_witness(max: u64) -> Result<(), String> {
    for q in split_primes(max) {
        let qd = lib(prime_decomp(q))?.unwrap();
        for m in 1..=10 {
            for n in 1..=10 {
                for a in 1..=10 {
                    for b in 1..=10 {
                        let Ok(Some(c)) = thm29_construct(m, n, a, b, qd.u, qd.v) else { continue };
                        if c.u % 2 == 0 || c.v % 2 == 1 {
                            continue;
                        }
                        let w = lib(thm29_decompose(c.u, c.v, qd.u, qd.v))?
                            .ok_or(format!("({}, {}, {q}) not decomposable", c.u, c.v))?;
                        ensure!(
                            (w.m, w.n, w.a, w.b) == (m, n, a, b),
                            "witness ({m}, {n}, {a}, {b}) for q = {q} came back as {w:?}"
                        );
                        let p = c.u * c.u + c.v * c.v;
                        if p != q && is_prime(p) {
                            lib(thm210_check(&w, p, q))?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

// ---- survey ----

fn survey_records(max: u64) -> Result<Vec<SurveyRecord>, String> {
    lib(survey_grid(max.min(SURVEY_CEILING), 1))
}

fn survey_monotone(max: u64) -> Result<(), String> {
    let records = survey_records(max)?;
    let x = max.min(SURVEY_CEILING);
    let mut prev = 0;
    for k in 1..=x {
        let s: u64 = records.iter().filter(|r| r.a <= k && r.b <= k).map(|r| r.h as u64).sum();
        ensure!(s >= prev, "S({k}) = {s} < S({}) = {prev}", k - 1);
        prev = s;
    }
    Ok(())
}

fn survey_ordered(max: u64) -> Result<(), String> {
    let x = max.min(20);
    let records = lib(survey_grid(x, 1))?;
    let total: u64 = records.iter().map(|r| r.h as u64).sum();
    let mut recount = 0u64;
    for a in 1..=x {
        for b in a..=x {
            let h = heron_formula_sides(a, b).len() as u64;
            recount += if a == b { h } else { 2 * h };
        }
    }
    ensure!(total == recount, "ordered total {total} vs unordered recount {recount}");
    Ok(())
}

fn survey_parallel(max: u64) -> Result<(), String> {
    let x = max.min(SURVEY_CEILING);
    let mut serial = Vec::new();
    let mut parallel = Vec::new();
    write_survey_csv(&lib(survey_grid(x, 1))?, &mut serial).map_err(|e| e.to_string())?;
    write_survey_csv(&lib(survey_grid(x, 4))?, &mut parallel).map_err(|e| e.to_string())?;
    ensure!(serial == parallel, "parallel CSV differs from serial");
    Ok(())
}

fn survey_envelope(max: u64) -> Result<(), String> {
    let xs: Vec<u64> = [25, 50, 100, 200].into_iter().filter(|&x| x <= max.min(SURVEY_CEILING)).collect();
    if xs.is_empty() {
        return Ok(());
    }
    let records = lib(survey_grid(*xs.last().unwrap(), 1))?;
    let report = report_from_records(&xs, &records);
    for (x, zf) in xs.iter().zip(&report.zero_fractions) {
        if zf.is_nan() || *zf < 0.5 {
            return Err(format!("zero fraction {zf} at x = {x}"));
        }
    }
    if let Some(e) = report.exponent {
        if e.is_nan() || e > 25.0 / 13.0 + 0.1 {
            return Err(format!("fitted exponent {e}"));
        }
    }
    Ok(())
}

fn suite_checks(suite: Suite) -> Vec<(&'static str, &'static str, Check)> {
    let arith: Vec<(&str, &str, Check)> = vec![
        ("arith", "r2 matches exhaustive count", arith_r2),
        ("arith", "sum-of-two-squares criterion", arith_representable),
        ("arith", "tau matches divisor scan", arith_tau),
        ("arith", "factorization reconstructs n", arith_reconstruct),
        ("arith", "tau and d1 are multiplicative", arith_multiplicative),
        ("arith", "perfect square detection", arith_squares),
        ("arith", "representations sum back", arith_reps),
    ];
    let heron: Vec<(&str, &str, Check)> = vec![
        ("heron", "window scan matches Heron's formula", heron_oracle_formula),
        ("heron", "angle enumeration matches window scan", heron_angles),
        ("heron", "H within window and divisor bounds", heron_bounds),
        ("heron", "H is symmetric", heron_symmetry),
        ("heron", "certificates are consistent", heron_certificates),
        ("heron", "isosceles prime sides", heron_isosceles),
    ];
    let primecase: Vec<(&str, &str, Check)> = vec![
        ("primecase", "classification matches window scan", prime_classify),
        ("primecase", "divisor characterization of equations 8 and 9", prime_lemma25),
        ("primecase", "equations 8 and 9 never both solvable", prime_cor26),
        ("primecase", "at most one of equations 8-11 solvable", prime_cor27),
        ("primecase", "equations 12-15 equal their square forms", prime_forms),
        ("primecase", "equation solutions are even Heron sides", prime_even_solutions),
        ("primecase", "equation 15 implies p + q is a sum of two squares", prime_cor211),
        ("primecase", "witness round trip", prime_witness),
    ];
    let survey: Vec<(&str, &str, Check)> = vec![
        ("survey", "S(x) nondecreasing", survey_monotone),
        ("survey", "ordered-pair convention", survey_ordered),
        ("survey", "parallel output equals serial", survey_parallel),
        ("survey", "zero fraction and exponent envelope", survey_envelope),
    ];
    match suite {
        Suite::Arith => arith,
        Suite::Heron => heron,
        Suite::Primecase => primecase,
        Suite::Survey => survey,
        Suite::All => [arith, heron, primecase, survey].concat(),
    }
}

/// Runs the checks of `suite` at scale `max`, reporting each outcome as it
/// completes and stopping at the first failure.
pub fn run(suite: Suite, max: u64, mut report: impl FnMut(&CheckOutcome)) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for (suite, name, check) in suite_checks(suite) {
        let result = check(max);
        let outcome =
            CheckOutcome { suite: suite.into(), name: name.into(), passed: result.is_ok(), detail: result.err() };
        report(&outcome);
        let failed = !outcome.passed;
        out.push(outcome);
        if failed {
            break;
        }
    }
    out
}
