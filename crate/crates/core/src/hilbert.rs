//! Numerical data attached to curves of maximal genus: the parameter
//! decomposition of `(d, n, s)`, the extremal `Δh` profile of a general
//! hyperplane section, Hilbert functions and genus bounds derived from it.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::One;

use crate::error::{ensure, Error, Result};

/// Inputs `d`, `n` and `s` are bounded so every derived quantity fits in `i64`.
pub const MAX_INPUT: i64 = 10_000_000;
/// Longest `Δh` sequence [`profile`] will materialize.
pub const MAX_PROFILE_LEN: i64 = 1 << 22;

/// The tuple `(d, n, s, m, ε, w, v, k, δ, e)` with its range flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MaxGenusParams {
    pub d: i64,
    pub n: i64,
    pub s: i64,
    pub m: i64,
    pub eps: i64,
    pub w: i64,
    pub v: i64,
    pub k: i64,
    pub delta: i64,
    pub e: i64,
    /// `d` exceeds the threshold under which the extremal profile is known to be sharp.
    pub in_asymptotic_range: bool,
    /// `s - 2 - w ≤ ε ≤ s - 2`.
    pub planar_residual_range: bool,
}

/// Divides `d - 1 = s·m + ε` and `s - 1 = (n-2)·w + v`, then splits `ε`
/// according to whether `ε ≥ w·(n-1-v)`.
pub fn decompose(d: i64, n: i64, s: i64) -> Result<MaxGenusParams> {
    ensure(n >= 4, "n_at_least_4", || format!("need n >= 4, got {n}"))?;
    ensure(s >= n - 1, "s_at_least_n_minus_1", || format!("need s >= n-1 = {}, got {s}", n - 1))?;
    ensure(d >= 1, "d_positive", || format!("need d >= 1, got {d}"))?;
    ensure(d <= MAX_INPUT && s <= MAX_INPUT && n <= MAX_INPUT, "input_bound", || {
        format!("d, n, s must be at most {MAX_INPUT}")
    })?;

    let (m, eps) = ((d - 1) / s, (d - 1) % s);
    let (w, v) = ((s - 1) / (n - 2), (s - 1) % (n - 2));
    ensure(m > w, "m_exceeds_w", || {
        format!("profile table needs m >= w+1, got m = {m}, w = {w}")
    })?;
    let (e, k, delta) = if eps < w * (n - 1 - v) {
        (0, eps / w, eps % w)
    } else {
        let t = eps + n - 2 - v;
        (1, t / (w + 1), t % (w + 1))
    };
    ensure(m + w + e < MAX_PROFILE_LEN, "profile_length_bound", || {
        format!("profile would have {} entries", m + w + e + 1)
    })?;
    Ok(MaxGenusParams {
        d,
        n,
        s,
        m,
        eps,
        w,
        v,
        k,
        delta,
        e,
        in_asymptotic_range: exceeds_asymptotic_threshold(d, n, s),
        planar_residual_range: s - 2 - w <= eps && eps <= s - 2,
    })
}

fn lcm_upto(k: u64) -> Option<u64> {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    (1..=k).try_fold(1u64, |acc, i| (acc / gcd(acc, i)).checked_mul(i))
}

/// Largest common denominator of `H_{n-2}` for which the exact test runs.
const EXACT_THRESHOLD_MAX_DENOM: u64 = 2520;

/// Tests `d > (2s/(n-2)) · Π_{i=1}^{n-2} ((n-1)!)^{1/(n-1-i)}`.
///
/// The product equals `((n-1)!)^{H_{n-2}}` with `H` the harmonic number.
/// The comparison is done in `f64` logarithms; when the two sides agree to
/// within `1e-9` (relative) it is redone exactly as
/// `(d(n-2))^q > (2s)^q · ((n-1)!)^p` for `H_{n-2} = p/q`, provided
/// `q ≤ 2520` (i.e. `n ≤ 12`). Beyond that the `f64` answer stands.
pub fn exceeds_asymptotic_threshold(d: i64, n: i64, s: i64) -> bool {
    let ln_fact: f64 = (2..n).map(|i| (i as f64).ln()).sum();
    let harmonic: f64 = (1..=n - 2).map(|j| 1.0 / j as f64).sum();
    let lhs = ((d * (n - 2)) as f64).ln() - ((2 * s) as f64).ln();
    let rhs = harmonic * ln_fact;
    if (lhs - rhs).abs() > 1e-9 * rhs.abs().max(1.0) {
        return lhs > rhs;
    }
    exact_threshold(d, n, s).unwrap_or(lhs > rhs)
}

/// Exact form of the threshold test, or `None` when the denominator of
/// `H_{n-2}` is too large.
fn exact_threshold(d: i64, n: i64, s: i64) -> Option<bool> {
    let q = lcm_upto((n - 2) as u64).filter(|&q| q <= EXACT_THRESHOLD_MAX_DENOM)?;
    let p: u64 = (1..=(n - 2) as u64).map(|j| q / j).sum();
    let fact: BigUint = (2..n as u64).map(BigUint::from).fold(BigUint::one(), |a, b| a * b);
    let q32 = q as u32;
    let left = BigUint::from((d * (n - 2)) as u64).pow(q32);
    let right = BigUint::from((2 * s) as u64).pow(q32) * fact.pow(p as u32);
    Some(left > right)
}

/// The extremal first difference of the Hilbert function at `r`.
pub fn delta_h(p: &MaxGenusParams, r: i64) -> i64 {
    let MaxGenusParams { n, s, m, w, k, delta, e, .. } = *p;
    if r < 0 || r > m + w + e {
        0
    } else if r <= w {
        (n - 2) * r + 1
    } else if r <= m {
        s
    } else if r <= m + delta {
        s + k - (n - 2) * (r - m)
    } else {
        s + k - (n - 2) * (r - m) - 1
    }
}

/// A finite `Δh` sequence with its cumulative Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertProfile {
    deltas: Vec<i64>,
    cumulative: Vec<i64>,
}

impl HilbertProfile {
    /// Wraps an explicit sequence `Δh(0), Δh(1), ...`; entries must be nonnegative.
    pub fn from_deltas(deltas: Vec<i64>) -> Result<Self> {
        if let Some(pos) = deltas.iter().position(|&x| x < 0) {
            return Err(Error::pre(
                "deltas_nonnegative",
                format!("Δh({pos}) = {} is negative", deltas[pos]),
            ));
        }
        let cumulative = deltas
            .iter()
            .scan(0i64, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        Ok(HilbertProfile { deltas, cumulative })
    }

    pub fn deltas(&self) -> &[i64] {
        &self.deltas
    }

    pub fn delta(&self, r: i64) -> i64 {
        usize::try_from(r).ok().and_then(|i| self.deltas.get(i)).copied().unwrap_or(0)
    }

    /// `h(r) = Σ_{j ≤ r} Δh(j)`.
    pub fn cumulative(&self, r: i64) -> i64 {
        if r < 0 {
            return 0;
        }
        let i = (r as usize).min(self.cumulative.len().saturating_sub(1));
        self.cumulative.get(i).copied().unwrap_or(0)
    }

    pub fn mass(&self) -> i64 {
        self.cumulative.last().copied().unwrap_or(0)
    }

    /// Genus of an arithmetically Cohen-Macaulay curve whose general
    /// hyperplane section has this profile: `Σ_{r≥1} (mass - h(r))`.
    pub fn acm_genus(&self) -> i64 {
        let mass = self.mass();
        self.cumulative.iter().skip(1).map(|&h| mass - h).sum()
    }

    /// `h^1(I_Z(k)) = mass - h(k)`, zero past regularity.
    pub fn h1_points(&self, k: i64) -> i64 {
        (self.mass() - self.cumulative(k)).max(0)
    }
}

/// Materializes the extremal profile; fails if its mass is not `d`.
pub fn profile(p: &MaxGenusParams) -> Result<HilbertProfile> {
    let deltas = (0..=p.m + p.w + p.e).map(|r| delta_h(p, r)).collect();
    let prof = HilbertProfile::from_deltas(deltas).map_err(|e| {
        Error::Consistency(format!("extremal profile for ({}, {}, {}): {e}", p.d, p.n, p.s))
    })?;
    if prof.mass() != p.d {
        return Err(Error::Consistency(format!(
            "Δh mass {} differs from d = {} for (d, n, s) = ({}, {}, {})",
            prof.mass(),
            p.d,
            p.d,
            p.n,
            p.s
        )));
    }
    Ok(prof)
}

/// `G(d, n, s)` as the genus of the ACM curve with the extremal profile.
pub fn genus_from_profile(p: &MaxGenusParams) -> Result<i64> {
    Ok(profile(p)?.acm_genus())
}

/// The literal closed expression for the bound and its disagreement with
/// the profile sum. `difference = closed_form - profile_sum`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub closed_form: Ratio<i64>,
    pub profile_sum: i64,
    pub difference: Ratio<i64>,
}

/// Evaluates `1 + d/2 (m+w-2) - (m+1)/2 (w-3) + vm/2 (w+1) + ρ` exactly.
pub fn closed_form_value(p: &MaxGenusParams) -> Ratio<i64> {
    let half = |x: i64| Ratio::new(x, 2);
    let MaxGenusParams { d, n, m, eps, w, v, delta, e, .. } = *p;
    let rho = if e == 0 {
        half(-delta) * (w - delta)
    } else {
        half(eps) - half(w) * (n - 2 - v) - half(delta) * (w - delta + 1)
    };
    Ratio::from_integer(1) + half(d) * (m + w - 2) - half(m + 1) * (w - 3) + half(v * m) * (w + 1) + rho
}

pub fn genus_closed_form(p: &MaxGenusParams) -> Result<ClosedFormReport> {
    let closed_form = closed_form_value(p);
    let profile_sum = genus_from_profile(p)?;
    Ok(ClosedFormReport {
        closed_form,
        profile_sum,
        difference: closed_form - profile_sum,
    })
}

fn castelnuovo_split(s: i64, big_n: i64) -> Result<(i64, i64)> {
    ensure(big_n >= 2 && s >= big_n, "s_at_least_N_at_least_2", || {
        format!("need s >= N >= 2, got s = {s}, N = {big_n}")
    })?;
    ensure(s <= MAX_INPUT, "input_bound", || format!("s must be at most {MAX_INPUT}"))?;
    Ok(((s - 1) / (big_n - 1), (s - 1) % (big_n - 1)))
}

/// Castelnuovo's bound for a nondegenerate degree-`s` curve in `P^N`:
/// with `s - 1 = (N-1)·w + v`, it is `binom(w, 2)·(N-1) + w·v`.
pub fn castelnuovo_genus(s: i64, big_n: i64) -> Result<i64> {
    let (w, v) = castelnuovo_split(s, big_n)?;
    Ok(w * (w - 1) / 2 * (big_n - 1) + w * v)
}

/// The same bound without the `(N-1)` factor on the binomial term.
pub fn castelnuovo_genus_printed(s: i64, big_n: i64) -> Result<i64> {
    let (w, v) = castelnuovo_split(s, big_n)?;
    Ok(w * (w - 1) / 2 + w * v)
}

/// `Σ_{r ≥ m+w-i+1} Δh(r)`, the dimension of forms of type `(i, n-4)`
/// through the residual curve's hyperplane section.
pub fn h0_residual(p: &MaxGenusParams, i: i64) -> Result<i64> {
    ensure(i >= 0 && i <= p.w && i <= p.m, "i_within_w_and_m", || {
        format!("need 0 <= i <= min(w, m) = {}, got {i}", p.w.min(p.m))
    })?;
    Ok((p.m + p.w - i + 1..=p.m + p.w + p.e).map(|r| delta_h(p, r)).sum())
}
