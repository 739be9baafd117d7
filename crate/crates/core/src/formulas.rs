//! Closed-form evaluators for the extremal quantities and explicit bounds,
//! plus the numeric entropy constants. All exact quantities are arbitrary
//! precision; the entropy constants are the only floating-point surface.

use crate::binom::{binomial, binomial_of_big};
use crate::counting::CopyCount;
use crate::poset::Poset;
use crate::profiles::{beta0_level, gamma_kernel, gamma_level};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormulaError {
    #[error("out of range: {0}")]
    Range(String),
    #[error("oracle failure: {0}")]
    Oracle(String),
}

/// An extremal value together with the size tuple achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArgValue {
    pub value: CopyCount,
    pub arg: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: CopyCount,
    pub upper: CopyCount,
}

/// Supplies La(n, P_{height(Q)+1}, Q) values to the composition bounds.
pub trait LaOracle {
    fn la(&self, n: usize, q: &Poset) -> Result<CopyCount, FormulaError>;
}

impl<F> LaOracle for F
where
    F: Fn(usize, &Poset) -> Result<CopyCount, FormulaError>,
{
    fn la(&self, n: usize, q: &Poset) -> Result<CopyCount, FormulaError> {
        self(n, q)
    }
}

/// Largest family with no (k+1)-chain: the sum of the k middle binomials.
pub fn sperner_erdos(n: usize, k: usize) -> Result<CopyCount, FormulaError> {
    if k == 0 || k > n + 1 {
        return Err(FormulaError::Range(format!(
            "need 1 <= k <= n+1, got n={n} k={k}"
        )));
    }
    let base = (n as i64 - k as i64).div_euclid(2);
    let mut total = BigUint::zero();
    for i in 1..=k as i64 {
        let j = base + i;
        if j >= 0 {
            total += binomial(n, j as usize);
        }
    }
    Ok(total)
}

/// Maximum number of k-chains in a family with no (k+1)-chain: the product
/// of binomials over a balanced level tuple. All balanced tuples give the
/// same value; the reported tuple is the lexicographically smallest.
pub fn la_chain_chain(n: usize, k: usize) -> Result<ArgValue, FormulaError> {
    if k == 0 || k > n + 1 {
        return Err(FormulaError::Range(format!(
            "need 1 <= k <= n+1, got n={n} k={k}"
        )));
    }
    let slots = k + 1;
    let q = n / slots;
    let rem = n % slots;
    // parts are q or q+1, with `rem` of the larger; interior parts must be
    // positive so the level tuple strictly increases
    let mut best: Option<Vec<usize>> = None;
    let positions: Vec<usize> = (0..slots).collect();
    for big_slots in combinations_idx(&positions, rem) {
        let mut parts = vec![q; slots];
        for &p in &big_slots {
            parts[p] += 1;
        }
        if parts[1..slots.saturating_sub(1).max(1)].contains(&0) && slots > 2 {
            continue;
        }
        if slots >= 2 && parts[1..slots - 1].contains(&0) {
            continue;
        }
        let mut tuple = Vec::with_capacity(k);
        let mut acc = 0usize;
        for &p in &parts[..k] {
            acc += p;
            tuple.push(acc);
        }
        if tuple.windows(2).any(|w| w[0] >= w[1]) {
            continue;
        }
        match &best {
            Some(t) if *t <= tuple => {}
            _ => best = Some(tuple),
        }
    }
    let tuple = best
        .ok_or_else(|| FormulaError::Range(format!("no balanced level tuple for n={n} k={k}")))?;
    let value = crate::profiles::chains_with_sizes(n, &tuple);
    Ok(ArgValue { value, arg: tuple })
}

fn combinations_idx(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Interior chain factor used by `multi1_value`: number of t-chains strictly
/// inside an interval of u fresh elements; zero when there is no room.
fn interior_chain_value(u: usize, t: usize) -> CopyCount {
    if t == 0 {
        return BigUint::one();
    }
    if t + 1 > u {
        return BigUint::zero();
    }
    la_chain_chain(u, t).map(|av| av.value).unwrap_or_default()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EasyCase {
    A,
    B,
    C,
    D,
}

/// The four elementary extremal values for forks, fork pairs and the
/// butterfly.
pub fn easy_value(case: EasyCase, n: usize, r: usize) -> Result<CopyCount, FormulaError> {
    if n == 0 {
        return Err(FormulaError::Range("need n >= 1".into()));
    }
    let mid = binomial(n, n / 2);
    match case {
        EasyCase::A => Ok(mid),
        EasyCase::B => Ok(binomial(n - 1, (n - 1) / 2)),
        EasyCase::C | EasyCase::D => {
            if r == 0 {
                return Err(FormulaError::Range("need r >= 1".into()));
            }
            Ok(binomial_of_big(&mid, r))
        }
    }
}

fn reduce_best(
    it: impl IntoParallelIterator<Item = (CopyCount, Vec<usize>)>,
) -> Option<(CopyCount, Vec<usize>)> {
    it.into_par_iter().reduce_with(|a, b| {
        if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
            b
        } else {
            a
        }
    })
}

/// Max over i of C(n,i) * C(C(i, i/2), r): copies of an r-fork under a
/// forbidden 3-chain. Ties break to the smaller i.
pub fn la_p3_fork(n: usize, r: usize) -> Result<ArgValue, FormulaError> {
    if r == 0 {
        return Err(FormulaError::Range("need r >= 1".into()));
    }
    let best = reduce_best((0..=n).into_par_iter().map(|i| {
        let v = binomial(n, i) * binomial_of_big(&binomial(i, i / 2), r);
        (v, vec![i])
    }))
    .expect("nonempty range");
    Ok(ArgValue {
        value: best.0,
        arg: best.1,
    })
}

/// Max over i < j of C(n,j) C(j,i) C(C(j-i, (j-i)/2), r): copies of an
/// r-diamond under a forbidden 4-chain.
pub fn la_p4_diamond(n: usize, r: usize) -> Result<ArgValue, FormulaError> {
    if r == 0 {
        return Err(FormulaError::Range("need r >= 1".into()));
    }
    if n == 0 {
        return Err(FormulaError::Range("need n >= 1".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let best = reduce_best(pairs.into_par_iter().map(|(i, j)| {
        let u = j - i;
        let v = binomial(n, j) * binomial(j, i) * binomial_of_big(&binomial(u, u / 2), r);
        (v, vec![i, j])
    }))
    .expect("nonempty range");
    Ok(ArgValue {
        value: best.0,
        arg: best.1,
    })
}

/// Sandwich bounds for La(n, D_k, D_l) in terms of the chain-chain value.
pub fn diamond_bounds(n: usize, k: usize, l: usize) -> Result<BoundPair, FormulaError> {
    if l == 0 || k <= l || n < k {
        return Err(FormulaError::Range(format!(
            "need k > l >= 1 and n >= k, got n={n} k={k} l={l}"
        )));
    }
    let coeff = binomial(k - 1, l);
    let lower = coeff.clone() * la_chain_chain(n - k + 1, 2)?.value;
    let pair_slack = binomial(k + 1, 2) - BigUint::from(k);
    let upper = pair_slack * coeff * la_chain_chain(n, 2)?.value;
    Ok(BoundPair { lower, upper })
}

/// Bounds on the extremal r-tuple counts over antichains: the
/// empty-intersection-full-union count (gamma) and the empty-intersection
/// count (beta).
#[derive(Clone, Debug)]
pub struct RTuplesBounds {
    pub n: usize,
    pub r: usize,
    pub gamma_bound: CopyCount,
    /// True when the gamma bound is sharp (r = 2); for r >= 3 it carries the
    /// polynomial factor n^{2r}.
    pub gamma_sharp: bool,
    pub beta_bound: CopyCount,
    pub beta_level: usize,
    /// True when the beta bound is sharp (r = 2); for r >= 3 it carries the
    /// polynomial factor n^{2r+1}.
    pub beta_sharp: bool,
}

/// Extremal level for pairwise-disjointness below the i-th intersection
/// floor: i + floor((n-i)/3), bumped to the ceiling when n-i = 2 mod 3.
fn disjointness_level(n: usize, i: usize) -> usize {
    let u = n - i;
    if u % 3 == 2 {
        i + u.div_ceil(3)
    } else {
        i + u / 3
    }
}

pub fn rtuples_bounds(n: usize, r: usize) -> Result<RTuplesBounds, FormulaError> {
    if r < 2 || n == 0 {
        return Err(FormulaError::Range("need r >= 2 and n >= 1".into()));
    }
    let (gamma_bound, gamma_sharp) = if r == 2 {
        if n.is_multiple_of(2) {
            (gamma_level(n, n / 2, 2, 0, n).map_err(range)?, true)
        } else {
            // complement-pair count in an antichain on odd ground
            let b = if n / 2 == 0 {
                BigUint::zero()
            } else {
                binomial(n - 1, n / 2 - 1)
            };
            (b, true)
        }
    } else {
        let poly = BigUint::from(n).pow(2 * r as u32);
        (poly * gamma_level(n, n / 2, r, 0, n).map_err(range)?, false)
    };
    let (beta_bound, beta_level, beta_sharp) = if r == 2 {
        let j0 = disjointness_level(n, 0);
        (beta0_level(n, j0, 2).map_err(range)?, j0, true)
    } else {
        let mut best = (BigUint::zero(), 0usize);
        for l in 0..=n {
            let v = beta0_level(n, l, r).map_err(range)?;
            if v > best.0 {
                best = (v, l);
            }
        }
        let poly = BigUint::from(n).pow(2 * r as u32 + 1);
        (poly * best.0, best.1, false)
    };
    Ok(RTuplesBounds {
        n,
        r,
        gamma_bound,
        gamma_sharp,
        beta_bound,
        beta_level,
        beta_sharp,
    })
}

fn range(e: crate::profiles::ProfileError) -> FormulaError {
    FormulaError::Range(e.to_string())
}

/// beta^2_i of the extremal full level: C(n,i) * beta^2_0 of level j(i)-i
/// in [n-i].
pub fn beta2_level_bound(n: usize, i: usize) -> Result<CopyCount, FormulaError> {
    if i >= n {
        return Err(FormulaError::Range(format!(
            "need 0 <= i < n, got n={n} i={i}"
        )));
    }
    let j = disjointness_level(n, i);
    Ok(binomial(n, i) * beta0_level(n - i, j - i, 2).map_err(range)?)
}

/// Upper bound for inserting an r-antichain between Q1 and Q2, evaluated
/// from La values for the two halves.
pub fn compose_otimes_bound(
    n: usize,
    q1: &Poset,
    r: usize,
    q2: &Poset,
    oracle: &dyn LaOracle,
) -> Result<CopyCount, FormulaError> {
    if r == 0 {
        return Err(FormulaError::Range("need r >= 1".into()));
    }
    if q1.is_empty() || q2.is_empty() {
        return Err(FormulaError::Range("operands must be non-empty".into()));
    }
    if r == 1 {
        let mut best = BigUint::zero();
        for j in 0..=n {
            let v = binomial(n, j) * oracle.la(j, q1)? * oracle.la(n - j, q2)?;
            best = best.max(v);
        }
        return Ok(best);
    }
    let mut best = BigUint::zero();
    for i in 0..n {
        let lo = oracle.la(i, q1)?;
        if lo.is_zero() {
            continue;
        }
        for j in i + 1..=n {
            let u = j - i;
            let kernel = gamma_kernel(u, u / 2, r);
            if kernel.is_zero() {
                continue;
            }
            let v = binomial(n, j) * binomial(j, i) * kernel * &lo * oracle.la(n - j, q2)?;
            best = best.max(v);
        }
    }
    Ok(BigUint::from(n).pow(2 * r as u32 + 2) * best)
}

/// Upper bound for appending an r-antichain above Q.
pub fn compose_oplus_bound(
    n: usize,
    q: &Poset,
    r: usize,
    oracle: &dyn LaOracle,
) -> Result<CopyCount, FormulaError> {
    if r == 0 {
        return Err(FormulaError::Range("need r >= 1".into()));
    }
    if q.is_empty() {
        return Err(FormulaError::Range("operand must be non-empty".into()));
    }
    if r == 1 {
        let mut best = BigUint::zero();
        for j in 0..=n {
            let v = binomial(n, j) * oracle.la(j, q)?;
            best = best.max(v);
        }
        return Ok(best);
    }
    let mut best = BigUint::zero();
    for i in 0..=n {
        let ci = binomial(n, i);
        for j in i..=n {
            let b0 = beta0_level(n - i, j - i, r).map_err(range)?;
            if b0.is_zero() {
                continue;
            }
            let v = ci.clone() * b0 * oracle.la(j, q)?;
            best = best.max(v);
        }
    }
    Ok(best)
}

/// Value, argmax and full level tuple for K(r, 1, ..., 1, s) with `mid`
/// middle singleton levels, maximized over interior level positions.
#[derive(Clone, Debug)]
pub struct Multi1Value {
    pub value: CopyCount,
    pub arg: Vec<usize>,
    pub levels: Vec<usize>,
}

pub fn multi1_value(n: usize, mid: usize, r: usize, s: usize) -> Result<Multi1Value, FormulaError> {
    if mid == 0 || r == 0 || s == 0 {
        return Err(FormulaError::Range("need mid, r, s >= 1".into()));
    }
    let w_low = |i: usize| binomial_of_big(&binomial(i, i / 2), r);
    let w_high = |i: usize| binomial_of_big(&binomial(n - i, (n - i) / 2), s);
    if mid == 1 {
        if n < 2 {
            return Err(FormulaError::Range("need n >= 2 for a middle level".into()));
        }
        let best = reduce_best((1..n).into_par_iter().map(|i| {
            let v = binomial(n, i) * w_low(i) * w_high(i);
            (v, vec![i])
        }))
        .expect("nonempty range");
        let i = best.1[0];
        let levels = vec![i / 2, i, (n + i) / 2];
        return Ok(Multi1Value {
            value: best.0,
            arg: best.1,
            levels,
        });
    }
    if n < mid + 1 {
        return Err(FormulaError::Range(format!(
            "need n >= {} for {mid} middle levels",
            mid + 1
        )));
    }
    let t = mid - 2;
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let best = reduce_best(pairs.into_par_iter().map(|(i, j)| {
        let v =
            binomial(n, j) * binomial(j, i) * w_low(i) * w_high(j) * interior_chain_value(j - i, t);
        (v, vec![i, j])
    }))
    .ok_or_else(|| FormulaError::Range("empty sweep".into()))?;
    if best.0.is_zero() {
        return Err(FormulaError::Range(format!(
            "no room for {mid} middle levels inside [{n}]"
        )));
    }
    let (i, j) = (best.1[0], best.1[1]);
    let mut levels = vec![i / 2, i];
    if t > 0 {
        let inner = la_chain_chain(j - i, t)?;
        levels.extend(inner.arg.iter().map(|&x| i + x));
    }
    levels.push(j);
    levels.push((n + j) / 2);
    Ok(Multi1Value {
        value: best.0,
        arg: best.1,
        levels,
    })
}

/// Lower and upper estimates for zigzag copies on a two-level union.
pub fn n_two_level_bounds(n: usize, i: usize, j: usize) -> Result<BoundPair, FormulaError> {
    if !(i < j && j <= n) {
        return Err(FormulaError::Range(format!(
            "need 0 <= i < j <= n, got n={n} i={i} j={j}"
        )));
    }
    let cj = binomial(n, j);
    let cji = binomial(j, i);
    let lower =
        cj.clone() * cji.clone() * cji.clone() * binomial(n - i, j - i) / BigUint::from(4u32);
    let upper = cj * cji * binomial(n - i, (n - i) / 2) * binomial(j, j / 2);
    Ok(BoundPair { lower, upper })
}

/// Binary entropy, with h(0) = h(1) = 0.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Exponent constant for counting copies of K(p,2) under a forbidden
/// 3-chain.
pub fn c_p(p: u32) -> f64 {
    let pw = (2f64).powi(p as i32);
    let pf = p as f64;
    (2.0 + pf * pw) / (3.0 + pw)
        + binary_entropy(pw / (3.0 + pw))
        + 3.0 / (3.0 + pw) * binary_entropy(2.0 / 3.0)
}

#[derive(Clone, Copy, Debug)]
pub struct NumericConstants {
    /// Real root of 7x^3 - 10x^2 + 5x - 1 in (0,1).
    pub c0: f64,
    /// Zigzag lower-bound exponent h(c0) + 3 c0 h((1-c0)/c0).
    pub c: f64,
    /// h(4/5) + 8/5.
    pub bb: f64,
    /// c_p at p = 2.
    pub c2: f64,
}

pub fn numeric_constants() -> NumericConstants {
    let f = |x: f64| 7.0 * x * x * x - 10.0 * x * x + 5.0 * x - 1.0;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let c0 = 0.5 * (lo + hi);
    let c = binary_entropy(c0) + 3.0 * c0 * binary_entropy((1.0 - c0) / c0);
    NumericConstants {
        c0,
        c,
        bb: binary_entropy(0.8) + 1.6,
        c2: c_p(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn sperner_erdos_values() {
        assert_eq!(sperner_erdos(3, 1).unwrap(), big(3));
        assert_eq!(sperner_erdos(4, 2).unwrap(), big(10));
        assert_eq!(sperner_erdos(2, 1).unwrap(), big(2));
        assert_eq!(sperner_erdos(3, 4).unwrap(), big(8));
        assert!(sperner_erdos(3, 0).is_err());
        assert!(sperner_erdos(3, 5).is_err());
        for n in 0..=100usize {
            assert_eq!(sperner_erdos(n, 1).unwrap(), binomial(n, n / 2));
        }
    }

    #[test]
    fn chain_chain_values() {
        let v = la_chain_chain(3, 2).unwrap();
        assert_eq!(v.value, big(6));
        assert_eq!(v.arg, vec![1, 2]);
        let v = la_chain_chain(2, 1).unwrap();
        assert_eq!(v.value, big(2));
        assert_eq!(v.arg, vec![1]);
        assert_eq!(la_chain_chain(4, 2).unwrap().value, big(12));
        assert_eq!(la_chain_chain(2, 2).unwrap().value, big(2));
        assert_eq!(la_chain_chain(1, 2).unwrap().value, big(1));
        // k = n+1 forces the full flag tuple
        assert_eq!(la_chain_chain(4, 5).unwrap().value, big(24));
        for n in 1..=100usize {
            assert_eq!(
                la_chain_chain(n, 1).unwrap().value,
                sperner_erdos(n, 1).unwrap()
            );
        }
    }

    #[test]
    fn chain_chain_arg_reproduces_value() {
        for n in 1..=12usize {
            for k in 1..=n + 1 {
                let av = la_chain_chain(n, k).unwrap();
                assert_eq!(av.arg.len(), k);
                assert_eq!(crate::profiles::chains_with_sizes(n, &av.arg), av.value);
            }
        }
    }

    #[test]
    fn easy_values() {
        assert_eq!(easy_value(EasyCase::A, 3, 1).unwrap(), big(3));
        assert_eq!(easy_value(EasyCase::B, 3, 1).unwrap(), big(2));
        assert_eq!(easy_value(EasyCase::C, 2, 2).unwrap(), big(1));
        for n in 1..=30usize {
            let mid = binomial(n, n / 2);
            assert_eq!(easy_value(EasyCase::C, n, 1).unwrap(), mid);
            assert_eq!(easy_value(EasyCase::D, n, 1).unwrap(), mid);
        }
    }

    #[test]
    fn fork_and_diamond_maxima() {
        let f = la_p3_fork(3, 2).unwrap();
        assert_eq!(f.value, big(3));
        assert_eq!(f.arg, vec![2]);
        let d = la_p4_diamond(4, 2).unwrap();
        assert_eq!(d.value, big(15));
        assert_eq!(d.arg, vec![0, 4]);
        // re-evaluating the expression at the argmax reproduces the value
        for n in [5usize, 9, 17] {
            for r in 1..=3usize {
                let f = la_p3_fork(n, r).unwrap();
                let i = f.arg[0];
                assert_eq!(
                    f.value,
                    binomial(n, i) * binomial_of_big(&binomial(i, i / 2), r)
                );
                let d = la_p4_diamond(n, r).unwrap();
                let (i, j) = (d.arg[0], d.arg[1]);
                let u = j - i;
                assert_eq!(
                    d.value,
                    binomial(n, j) * binomial(j, i) * binomial_of_big(&binomial(u, u / 2), r)
                );
            }
        }
    }

    #[test]
    fn diamond_argmax_is_near_complementary() {
        for n in 2..=60usize {
            for r in 1..=3usize {
                let d = la_p4_diamond(n, r).unwrap();
                let (i, j) = (d.arg[0], d.arg[1]);
                assert!(
                    j == n - i || j + 1 == n - i,
                    "n={n} r={r} argmax ({i},{j}) not complementary"
                );
            }
        }
    }

    #[test]
    fn diamond_bounds_values() {
        let b = diamond_bounds(3, 2, 1).unwrap();
        assert_eq!(b.lower, big(2));
        assert_eq!(b.upper, big(6));
        let b = diamond_bounds(4, 2, 1).unwrap();
        assert_eq!(b.lower, big(6));
        assert_eq!(b.upper, big(12));
        assert!(diamond_bounds(4, 2, 2).is_err());
        for n in 2..=30usize {
            for k in 2..=6usize.min(n) {
                for l in 1..k {
                    let b = diamond_bounds(n, k, l).unwrap();
                    assert!(b.lower <= b.upper, "n={n} k={k} l={l}");
                }
            }
        }
    }

    #[test]
    fn rtuples_values() {
        let b = rtuples_bounds(4, 2).unwrap();
        assert_eq!(b.beta_bound, big(6));
        assert_eq!(b.beta_level, 1);
        let b = rtuples_bounds(3, 2).unwrap();
        assert_eq!(b.gamma_bound, big(1));
        assert_eq!(b.beta_bound, big(3));
        // beta formula matches the displayed sharp value when n = 0,1 mod 3
        for n in [3usize, 4, 6, 7, 9] {
            let b = rtuples_bounds(n, 2).unwrap();
            let expect = binomial(n, n / 3) * binomial(n - n / 3, n / 3) / big(2);
            assert_eq!(b.beta_bound, expect, "n={n}");
        }
    }

    #[test]
    fn beta2_bound_values() {
        assert_eq!(beta2_level_bound(3, 0).unwrap(), big(3));
        assert_eq!(beta2_level_bound(4, 1).unwrap(), big(12));
        assert!(beta2_level_bound(3, 3).is_err());
    }

    #[test]
    fn compose_bounds() {
        // oracle: La(j, P2, P1) = middle binomial
        let oracle = |j: usize, q: &Poset| -> Result<CopyCount, FormulaError> {
            assert_eq!(q.len(), 1);
            Ok(binomial(j, j / 2))
        };
        let p1 = Poset::chain(1).unwrap();
        let v = compose_otimes_bound(3, &p1, 1, &p1, &oracle).unwrap();
        assert_eq!(v, big(6));
        let v = compose_oplus_bound(2, &p1, 1, &oracle).unwrap();
        assert_eq!(v, big(2));
        // an upper bound dominates the corresponding level construction
        for n in 2..=5usize {
            let bound = compose_oplus_bound(n, &p1, 2, &oracle).unwrap();
            // construction: a full level plus r pairwise-disjoint-ish tops is
            // dominated; compare against best two-level fork count
            let fork = la_p3_fork(n, 2).unwrap().value;
            assert!(bound >= fork, "n={n}");
        }
    }

    #[test]
    fn multi1_values() {
        let m = multi1_value(2, 1, 1, 1).unwrap();
        assert_eq!(m.value, big(2));
        assert_eq!(m.arg, vec![1]);
        assert_eq!(m.levels, vec![0, 1, 1]);
        assert_eq!(m.levels[0], m.levels[1] / 2);

        let m = multi1_value(4, 1, 2, 1).unwrap();
        assert_eq!(m.value, big(12));
        assert_eq!(m.arg, vec![2]);
        assert_eq!(m.levels, vec![1, 2, 3]);

        let m = multi1_value(6, 2, 2, 2).unwrap();
        assert_eq!(m.arg.len(), 2);
        assert_eq!(m.levels.len(), 4);
        assert_eq!(m.levels[0], m.levels[1] / 2);

        let m = multi1_value(8, 3, 1, 1).unwrap();
        assert_eq!(m.levels.len(), 5);
        let mut sorted = m.levels.clone();
        sorted.dedup();
        assert_eq!(sorted, m.levels, "interior levels strictly increase");
    }

    #[test]
    fn multi1_arg_reproduces_value() {
        let w = |i: usize, r: usize| binomial_of_big(&binomial(i, i / 2), r);
        for (n, r, s) in [(5usize, 1usize, 2usize), (6, 2, 1), (7, 2, 2)] {
            let m = multi1_value(n, 1, r, s).unwrap();
            let i = m.arg[0];
            assert_eq!(m.value, binomial(n, i) * w(i, r) * w(n - i, s));
        }
        for (n, mid, r, s) in [(6usize, 2usize, 1usize, 1usize), (8, 3, 2, 1)] {
            let m = multi1_value(n, mid, r, s).unwrap();
            let (i, j) = (m.arg[0], m.arg[1]);
            let interior = if mid == 2 {
                BigUint::one()
            } else {
                la_chain_chain(j - i, mid - 2).unwrap().value
            };
            assert_eq!(
                m.value,
                binomial(n, j) * binomial(j, i) * w(i, r) * w(n - j, s) * interior
            );
        }
    }

    #[test]
    fn n_two_level_values() {
        let b = n_two_level_bounds(4, 1, 3).unwrap();
        assert_eq!(b.lower, big(27));
        assert!(b.lower <= b.upper);
        assert!(n_two_level_bounds(4, 3, 3).is_err());
    }

    #[test]
    fn constants() {
        let c = numeric_constants();
        assert!((c.c0 - 0.69922).abs() < 1e-4);
        assert!((c.c - 2.9502).abs() < 1e-3);
        assert!((c.bb - 2.3219).abs() < 1e-3);
        assert!(c.bb < c.c2);
        assert!((binary_entropy(0.5) - 1.0).abs() < 1e-12);
        for i in 1..50 {
            let x = i as f64 / 50.0;
            assert!((binary_entropy(x) - binary_entropy(1.0 - x)).abs() < 1e-12);
        }
    }
}
