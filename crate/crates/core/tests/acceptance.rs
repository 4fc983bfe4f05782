//! Acceptance run: one PASS/FAIL line per criterion with its runtime.
//!
//! The run reports rather than gates: a FAIL line is printed but the
//! process exits 0 so the rest of `cargo test` still runs.  Set
//! `ACCEPTANCE_STRICT=1` to exit non-zero on any failure.

use jnzeros::harness::{certify, CertifyConfig};
use jnzeros::mcmahon::{bound_threshold, mcmahon_zero, phase, target_index};
use jnzeros::oracle::{interlacing_with, kth_zero, scan_zeros};
use jnzeros::polycoeff::{alpha_oracle, recurrence_table};
use jnzeros::specfun::{airy_ai, airy_ai_prime, airy_prime_zero, airy_zero, bessel_j, bessel_j_deriv};
use jnzeros::uniform::{airy_family_cross_check, deriv_reduction, large_nu_zero};
use jnzeros::{Exec, ZeroQuery};
use rand::prelude::*;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn q(n: u32, nu: f64, k: u32) -> ZeroQuery {
    ZeroQuery::new(n, nu, k).expect("valid query")
}

/// 1. ν = 1/2, n = 0: mcmahon-3 and the oracle reproduce kπ.
fn half_integer() -> Outcome {
    let mut worst_est = 0.0f64;
    for k in 1..=50 {
        let e = mcmahon_zero(&q(0, 0.5, k), 3).unwrap();
        worst_est = worst_est.max((e.value - k as f64 * PI).abs());
    }
    let list = scan_zeros(0, 0.5, 50.0 * PI + 1.0, PI / 8.0).unwrap();
    let worst_oracle = (1..=50).map(|k| (list.get(k).unwrap_or(f64::NAN) - k as f64 * PI).abs()).fold(0.0, f64::max);
    outcome(
        worst_est <= 1e-13 && worst_oracle <= 1e-11,
        format!("max |mcmahon-3 - k*pi| = {worst_est:.2e} (<= 1e-13), max |oracle - k*pi| = {worst_oracle:.2e} (<= 1e-11)"),
    )
}

/// 2. Amplitude-remainder bound on the 50-point grid.
fn remainder_bound() -> Outcome {
    let cfg = CertifyConfig { d_list: vec![2, 3, 4], nu_list: vec![1.0, 2.0, 5.0], x_min: 50.0, x_max: 500.0, points: 50 };
    let (rows, _) = certify(&cfg, Exec::default()).unwrap();
    let applicable = rows.iter().filter(|r| r.applicable).count();
    let violations = rows.iter().filter(|r| !r.pass || !r.applicable).count();
    let margin = rows.iter().filter(|r| r.bound.is_some_and(|b| r.abs_error <= 0.9 * b)).count();
    let frac = margin as f64 / rows.len() as f64;
    outcome(
        violations == 0 && frac >= 0.95,
        format!("{} points, {applicable} applicable, {violations} violations, {:.1}% within 0.9*bound (>= 95%)", rows.len(), 100.0 * frac),
    )
}

/// 3. Zero-error certificate from the threshold on.
fn zero_certificate() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for &(d, nu) in &[(2u32, 1.0f64), (3, 2.5)] {
        let k0 = bound_threshold(d, nu).ceil() as u32;
        let k1 = k0 + 40;
        let c = 4.0 * (nu + d as f64).powi(2) - 1.0;
        let last = target_index(&q(d, nu, k1));
        let list = scan_zeros(d, nu, phase(d, nu, k1) + 4.0 * PI, PI / 8.0).unwrap();
        let mut worst = 0.0f64;
        for k in k0..=k1 {
            // position among positive zeros (for d = 2, ν = 1 the origin is the first zero)
            let z = list.get(target_index(&q(d, nu, k)) as usize).unwrap_or(f64::NAN);
            let bound = 0.26 * c / (PI * (k as f64 + nu / 2.0 - 0.314));
            let r = (z - phase(d, nu, k)).abs() / bound;
            ok &= r <= 1.0;
            worst = worst.max(r);
        }
        lines.push(format!("d={d} nu={nu} k={k0}..={k1} (last target {last}): max error/bound = {worst:.3}"));
    }
    outcome(ok, lines.join("; "))
}

/// 4. mcmahon-2 residual ratio between k = 20 and k = 40.
fn mcmahon_rate() -> Outcome {
    let res = |k| {
        let e = mcmahon_zero(&q(0, 1.0, k), 2).unwrap();
        (e.value - kth_zero(&q(0, 1.0, e.target_index)).unwrap()).abs()
    };
    let ratio = res(40) / res(20);
    outcome((0.1..=1.0 / 6.0).contains(&ratio), format!("residual(40)/residual(20) = {ratio:.4} (in [0.1, 0.1667])"))
}

/// 5. Recurrence and oracle tables agree exactly; degree and parity hold.
fn coefficient_tables() -> Outcome {
    let (rec, ora) = (recurrence_table(8, 8).unwrap(), alpha_oracle(8, 8).unwrap());
    let diff = rec.diff(&ora);
    let mut bad = 0;
    for e in rec.entries() {
        let p = rec.get(e.m as i64, e.n).unwrap();
        if !p.is_even() || p.degree().is_some_and(|d| d > 2 * e.m) || p.degree().is_none() {
            bad += 1;
        }
    }
    outcome(diff.is_empty() && bad == 0, format!("{} differing entries, {bad} invariant violations over 81 entries", diff.len()))
}

/// 6. Large-order scaling and the Airy-zero family selection.
fn large_order() -> Outcome {
    let res = |nu| {
        let e = large_nu_zero(&q(2, nu, 1), 2).unwrap();
        (e.value - kth_zero(&q(2, nu, e.target_index)).unwrap()).abs()
    };
    let (r100, r400) = (res(100.0), res(400.0));
    let scale_ok = r400 <= 4f64.powf(-1.0 / 3.0) * 1.5 * r100;
    let mut ok = scale_ok;
    let mut parts = vec![format!("n=2: residual(400)/residual(100) = {:.4} (<= 0.945)", r400 / r100)];
    for n in [2, 3] {
        let c = airy_family_cross_check(n, 200.0, 1).unwrap();
        ok &= c.ratio() >= 10.0;
        parts.push(format!(
            "n={n}: {} residual {:.3e} vs {} {:.3e}, ratio {:.2} (>= 10); Ai^({n}) zero residual {:.3e}",
            c.selected,
            c.selected_residual,
            c.selected.opposite(),
            c.opposite_residual,
            c.ratio(),
            c.airy_derivative_residual
        ));
    }
    outcome(ok, parts.join("; "))
}

/// 7. Interlacing of consecutive derivative orders at ν = 6.
fn interlacing() -> Outcome {
    let res: Vec<bool> = (0..4).map(|n| interlacing_with(Exec::default(), n, 6.0, 10).unwrap()).collect();
    outcome(res.iter().all(|&b| b), format!("pairs (n, n+1) for n = 0..3: {res:?}"))
}

/// 8. Airy zero table: residuals, ordering, alternation.
fn airy_table() -> Outcome {
    let a: Vec<f64> = (1..=20).map(|k| airy_zero(k).unwrap()).collect();
    let ap: Vec<f64> = (1..=20).map(|k| airy_prime_zero(k).unwrap()).collect();
    let ra = a.iter().map(|&z| airy_ai(z).unwrap().abs()).fold(0.0, f64::max);
    let rp = ap.iter().map(|&z| airy_ai_prime(z).unwrap().abs()).fold(0.0, f64::max);
    let decreasing = |v: &[f64]| v.windows(2).all(|w| w[1] < w[0]) && v[0] < 0.0;
    let alternating = (0..20).all(|i| a[i] < ap[i] && ap.get(i + 1).map_or(true, |&b| b < a[i]));
    outcome(
        ra <= 1e-12 && rp <= 1e-12 && decreasing(&a) && decreasing(&ap) && alternating,
        format!("max |Ai(a_k)| = {ra:.1e}, max |Ai'(a'_k)| = {rp:.1e}, ordered: {}, alternating: {alternating}", decreasing(&a) && decreasing(&ap)),
    )
}

/// 9. Reduction identity at random points away from zeros of J^(n).
fn reduction_identity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let (mut worst, mut used, mut skipped) = (0.0f64, 0, 0);
    for n in 2..=6 {
        let r = deriv_reduction(n).unwrap();
        for _ in 0..100 {
            let nu: f64 = rng.random_range(5.0..30.0);
            let x: f64 = rng.random_range(2.0..3.0 * nu);
            let want = bessel_j_deriv(n, nu, x).unwrap();
            if [x - 1e-3, x + 1e-3].iter().any(|&y| bessel_j_deriv(n, nu, y).unwrap().signum() != want.signum()) {
                skipped += 1;
                continue;
            }
            let got = r.apply(x, nu, bessel_j(nu, x).unwrap(), bessel_j_deriv(1, nu, x).unwrap());
            worst = worst.max((got - want).abs() / want.abs());
            used += 1;
        }
    }
    outcome(worst <= 1e-9, format!("{used} points ({skipped} near zeros skipped), max relative residual {worst:.2e} (<= 1e-9)"))
}

fn main() {
    // `cargo test` passes filter arguments; this runner has no subtests.
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("half-integer exactness", Duration::from_secs(5), half_integer),
        ("amplitude remainder bound", Duration::from_secs(10), remainder_bound),
        ("zero-error certificate", Duration::from_secs(60), zero_certificate),
        ("McMahon rate", Duration::from_secs(5), mcmahon_rate),
        ("coefficient oracle equivalence", Duration::from_secs(5), coefficient_tables),
        ("large-order scaling and family", Duration::from_secs(120), large_order),
        ("interlacing", Duration::from_secs(10), interlacing),
        ("Airy table", Duration::from_secs(1), airy_table),
        ("reduction identity", Duration::from_secs(5), reduction_identity),
    ];
    let mut failed = Vec::new();
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let dt = t.elapsed();
        let timely = dt <= *budget;
        let pass = o.pass && timely;
        println!(
            "criterion {}: {} {name} [{:.2} s, budget {} s{}] {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            dt.as_secs_f64(),
            budget.as_secs(),
            if timely { "" } else { ", over budget" },
            o.detail
        );
        if !pass {
            failed.push(i + 1);
        }
    }
    println!("acceptance: {}/9 PASS{}", 9 - failed.len(), if failed.is_empty() { String::new() } else { format!(", FAIL: {failed:?}") });
    if !failed.is_empty() && std::env::var_os("ACCEPTANCE_STRICT").is_some_and(|v| v == "1") {
        std::process::exit(1);
    }
}
