//! Small quadrature and root-bracketing helpers shared by the Casimir
//! oracles and the spectrum-selection functional.

/// Composite Simpson rule with `panels` subdivisions (made even if needed).
pub(crate) fn simpson(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let n = panels.max(2) + panels % 2;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let x = a + i as f64 * h;
        acc += if i % 2 == 1 { 4.0 * f(x) } else { 2.0 * f(x) };
    }
    acc * h / 3.0
}

/// Simpson with panel doubling until the result settles to `tol` (relative
/// to max(1, |I|)) or the panel cap is hit.
pub(crate) fn simpson_converged(
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> f64 {
    let mut panels = 64;
    let mut prev = simpson(f, a, b, panels);
    loop {
        panels *= 2;
        let next = simpson(f, a, b, panels);
        if (next - prev).abs() <= tol * next.abs().max(1.0) || panels >= 1 << 20 {
            return next;
        }
        prev = next;
    }
}

/// Adaptive trapezoid rule: bisect any interval whose two-panel estimate
/// disagrees with its one-panel estimate by more than the local tolerance.
pub(crate) fn adaptive_trapezoid(
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let whole = 0.5 * (fa + fb) * (b - a);
    trapezoid_step(f, a, b, fa, fb, whole, tol, 48)
}

#[allow(clippy::too_many_arguments)]
fn trapezoid_step(
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let fm = f(m);
    let left = 0.25 * (fa + fm) * (b - a);
    let right = 0.25 * (fm + fb) * (b - a);
    if depth == 0 || (left + right - whole).abs() <= tol {
        return left + right;
    }
    trapezoid_step(f, a, m, fa, fm, left, 0.5 * tol, depth - 1)
        + trapezoid_step(f, m, b, fm, fb, right, 0.5 * tol, depth - 1)
}

/// Bisection for a root of `f` inside [a, b], given f(a) f(b) < 0.
pub(crate) fn bisect_root(
    f: &mut impl FnMut(f64) -> f64,
    mut a: f64,
    mut b: f64,
    mut fa: f64,
    tol: f64,
) -> f64 {
    while b - a > tol {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}
