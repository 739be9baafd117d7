//! Profile vectors of families: size profiles, l-chain profiles, r-wise
//! intersection (beta) and intersection-union (gamma) vectors, level-weight
//! maximization over k full levels, and exact copy counts of complete
//! multi-level posets on unions of full levels.

use crate::binom::{binomial, binomial_u128, factorial};
use crate::counting::{Budget, CopyCount};
use crate::family::{level_masks, SetFamily};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProfileError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
}

/// Enumerate gamma kernels directly while the number of r-subsets stays
/// below this; switch to inclusion-exclusion beyond.
const GAMMA_ENUM_LIMIT: u128 = 200_000;

/// Size profile alpha: alpha[i] = number of members of size i.
pub fn profile(f: &SetFamily) -> Vec<u64> {
    f.size_profile()
}

/// The profile data of one family: size profile, l-chain profile, and the
/// beta/gamma vectors for each requested r.
#[derive(Clone, Debug)]
pub struct ProfileBundle {
    pub alpha: Vec<u64>,
    pub chain_profile: BTreeMap<Vec<usize>, CopyCount>,
    pub beta: BTreeMap<usize, Vec<CopyCount>>,
    pub gamma: BTreeMap<usize, BTreeMap<(usize, usize), CopyCount>>,
}

pub fn profile_bundle(
    f: &SetFamily,
    l: usize,
    rs: &[usize],
    budget: &Budget,
) -> Result<ProfileBundle, ProfileError> {
    let mut bundle = ProfileBundle {
        alpha: profile(f),
        chain_profile: chain_profile(f, l)?,
        beta: BTreeMap::new(),
        gamma: BTreeMap::new(),
    };
    for &r in rs {
        bundle.beta.insert(r, beta(f, r, budget)?);
        bundle.gamma.insert(r, gamma(f, r, budget)?);
    }
    Ok(bundle)
}

/// l-chain profile: for each strictly increasing size tuple, the number of
/// chains F_1 < ... < F_l in F with those sizes. Zero entries are omitted.
pub fn chain_profile(
    f: &SetFamily,
    l: usize,
) -> Result<BTreeMap<Vec<usize>, CopyCount>, ProfileError> {
    if l == 0 {
        return Err(ProfileError::InvalidParameter(
            "l must be at least 1".into(),
        ));
    }
    let members = f.members();
    let sizes: Vec<usize> = {
        let mut s: Vec<usize> = members.iter().map(|m| m.count_ones() as usize).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let mut out = BTreeMap::new();
    if sizes.len() < l {
        return Ok(out);
    }
    let by_size = |s: usize| -> Vec<u32> {
        members
            .iter()
            .copied()
            .filter(|m| m.count_ones() as usize == s)
            .collect()
    };
    for tuple in combinations(&sizes, l) {
        // layered DP along the tuple
        let mut layer: Vec<(u32, BigUint)> = by_size(tuple[0])
            .into_iter()
            .map(|m| (m, BigUint::one()))
            .collect();
        for &s in &tuple[1..] {
            let next: Vec<(u32, BigUint)> = by_size(s)
                .into_iter()
                .map(|g| {
                    let total: BigUint = layer
                        .iter()
                        .filter(|(m, _)| m & g == *m && *m != g)
                        .map(|(_, c)| c.clone())
                        .sum();
                    (g, total)
                })
                .collect();
            layer = next;
        }
        let total: BigUint = layer.into_iter().map(|(_, c)| c).sum();
        if !total.is_zero() {
            out.insert(tuple, total);
        }
    }
    Ok(out)
}

fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn check_subset_budget(m: usize, r: usize, budget: &Budget) -> Result<(), ProfileError> {
    match binomial_u128(m as u128, r as u128) {
        Some(c) if c <= budget.max_nodes as u128 => Ok(()),
        _ => Err(ProfileError::BudgetExceeded(format!(
            "C({m},{r}) r-subsets exceed the budget of {}",
            budget.max_nodes
        ))),
    }
}

/// r-intersection profile: beta[i] = number of r-subsets of distinct members
/// whose intersection has size i, for i in 0..n.
pub fn beta(f: &SetFamily, r: usize, budget: &Budget) -> Result<Vec<CopyCount>, ProfileError> {
    if r < 2 {
        return Err(ProfileError::InvalidParameter(
            "r must be at least 2".into(),
        ));
    }
    check_subset_budget(f.len(), r, budget)?;
    let n = f.n();
    let members = f.members();
    let counts = (0..members.len())
        .into_par_iter()
        .map(|first| {
            let mut local = vec![0u64; n + 1];
            let m0 = members[first];
            rec_subsets(members, first + 1, r - 1, m0, m0, &mut |inter, _uni| {
                local[inter.count_ones() as usize] += 1;
            });
            local
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(counts[..n].iter().map(|&c| BigUint::from(c)).collect())
}

/// r-intersection-union profile: entry (i, j) counts r-subsets with
/// intersection size i and union size j. Only nonzero entries are stored.
pub fn gamma(
    f: &SetFamily,
    r: usize,
    budget: &Budget,
) -> Result<BTreeMap<(usize, usize), CopyCount>, ProfileError> {
    if r < 2 {
        return Err(ProfileError::InvalidParameter(
            "r must be at least 2".into(),
        ));
    }
    check_subset_budget(f.len(), r, budget)?;
    let members = f.members();
    let table = (0..members.len())
        .into_par_iter()
        .map(|first| {
            let mut local: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            let m0 = members[first];
            rec_subsets(members, first + 1, r - 1, m0, m0, &mut |inter, uni| {
                *local
                    .entry((inter.count_ones() as usize, uni.count_ones() as usize))
                    .or_insert(0) += 1;
            });
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(table
        .into_iter()
        .map(|(k, v)| (k, BigUint::from(v)))
        .collect())
}

fn rec_subsets(
    members: &[u32],
    start: usize,
    remaining: usize,
    inter: u32,
    uni: u32,
    visit: &mut impl FnMut(u32, u32),
) {
    if remaining == 0 {
        visit(inter, uni);
        return;
    }
    for i in start..members.len() {
        rec_subsets(
            members,
            i + 1,
            remaining - 1,
            inter & members[i],
            uni | members[i],
            visit,
        );
    }
}

/// Surjection counts surj[t][k] = number of surjections from [t] onto [k].
fn surjection_table(r: usize) -> Vec<Vec<BigUint>> {
    let mut s = vec![vec![BigUint::zero(); r + 1]; r + 1];
    s[0][0] = BigUint::one();
    for t in 1..=r {
        for k in 1..=t {
            let prev = s[t - 1][k - 1].clone() + s[t - 1][k].clone();
            s[t][k] = prev * k;
        }
    }
    s
}

/// Converts ordered-with-repetition tuple counts into unordered distinct
/// r-subset counts. `w(t)` must count ordered t-tuples (repetition allowed)
/// of a support-determined predicate.
fn mobius_distinct_unordered(w: &dyn Fn(usize) -> BigInt, r: usize) -> BigUint {
    let surj = surjection_table(r);
    let mut d: Vec<BigInt> = Vec::with_capacity(r);
    for (t, surj_t) in surj.iter().enumerate().take(r + 1).skip(1) {
        let mut acc = w(t);
        for k in 1..t {
            acc -= BigInt::from(surj_t[k].clone()) * &d[k - 1];
        }
        let fact = BigInt::from(factorial(t));
        debug_assert!((&acc % &fact).is_zero());
        d.push(acc / fact);
    }
    let last = d.pop().unwrap();
    debug_assert!(!last.is_negative());
    last.to_biguint().unwrap_or_default()
}

/// Kernel: number of r-subsets of the m'-level of [u] with empty
/// intersection and union [u], by direct enumeration.
pub(crate) fn gamma_kernel_enum(u: usize, mp: usize, r: usize) -> BigUint {
    let members = level_masks(u, mp);
    let full = crate::family::full_mask(u);
    let mut count: u64 = 0;
    if r > members.len() {
        return BigUint::zero();
    }
    for first in 0..members.len() {
        let m0 = members[first];
        rec_subsets(&members, first + 1, r - 1, m0, m0, &mut |inter, uni| {
            if inter == 0 && uni == full {
                count += 1;
            }
        });
    }
    BigUint::from(count)
}

/// Same kernel by inclusion-exclusion over forbidden covered/uncovered
/// elements, corrected from ordered tuples to unordered distinct subsets.
pub(crate) fn gamma_kernel_ie(u: usize, mp: usize, r: usize) -> BigUint {
    let w = |t: usize| -> BigInt {
        let mut acc = BigInt::zero();
        for a in 0..=mp.min(u) {
            for b in 0..=(u - a) {
                let ways = BigInt::from(binomial(u, a) * binomial(u - a, b))
                    * BigInt::from(binomial(u - a - b, mp - a).pow(t as u32));
                if (a + b) % 2 == 0 {
                    acc += ways;
                } else {
                    acc -= ways;
                }
            }
        }
        acc
    };
    mobius_distinct_unordered(&w, r)
}

/// gamma^r_{0,u} of the m'-level of [u]: closed form for r = 2, enumeration
/// or inclusion-exclusion for r >= 3.
pub(crate) fn gamma_kernel(u: usize, mp: usize, r: usize) -> BigUint {
    debug_assert!(r >= 2);
    if mp > u {
        return BigUint::zero();
    }
    if r == 2 {
        // two distinct m'-sets with empty intersection and full union force
        // u = 2m'; there are C(u, m')/2 such unordered pairs
        if u > 0 && u.is_multiple_of(2) && mp * 2 == u {
            return binomial(u, mp) / BigUint::from(2u32);
        }
        return BigUint::zero();
    }
    let feasible = binomial_u128(u as u128, mp as u128)
        .and_then(|lvl| binomial_u128(lvl, r as u128))
        .map(|c| c <= GAMMA_ENUM_LIMIT)
        .unwrap_or(false);
    if feasible {
        gamma_kernel_enum(u, mp, r)
    } else {
        gamma_kernel_ie(u, mp, r)
    }
}

/// Number of r-subsets of the m'-level of [u] whose union is all of [u]
/// (intersection unconstrained).
pub(crate) fn union_full_kernel(u: usize, mp: usize, r: usize) -> BigUint {
    if mp > u {
        return BigUint::zero();
    }
    let w = |t: usize| -> BigInt {
        let mut acc = BigInt::zero();
        for b in 0..=u {
            let ways =
                BigInt::from(binomial(u, b)) * BigInt::from(binomial(u - b, mp).pow(t as u32));
            if b % 2 == 0 {
                acc += ways;
            } else {
                acc -= ways;
            }
        }
        acc
    };
    mobius_distinct_unordered(&w, r)
}

/// beta^r_0 of the m-level of [n]: r-subsets with empty intersection.
pub fn beta0_level(n: usize, m: usize, r: usize) -> Result<CopyCount, ProfileError> {
    if r < 2 {
        return Err(ProfileError::InvalidParameter(
            "r must be at least 2".into(),
        ));
    }
    if m > n {
        return Ok(BigUint::zero());
    }
    if r == 2 {
        // disjoint pairs of m-sets
        return Ok(binomial(n, m) * binomial(n - m, m) / BigUint::from(2u32));
    }
    // group by union size
    let mut total = BigUint::zero();
    for j in m..=n {
        total += binomial(n, j) * gamma_kernel(j, m, r);
    }
    Ok(total)
}

/// gamma^r_{i,j} of the m-level of [n], via the reduction that picks the
/// union of size j and the intersection of size i first.
pub fn gamma_level(
    n: usize,
    m: usize,
    r: usize,
    i: usize,
    j: usize,
) -> Result<CopyCount, ProfileError> {
    if r < 2 {
        return Err(ProfileError::InvalidParameter(
            "r must be at least 2".into(),
        ));
    }
    if !(i < j && j <= n && i <= m && m <= j) {
        return Err(ProfileError::InvalidParameter(format!(
            "need 0 <= i < j <= n and i <= m <= j, got n={n} m={m} i={i} j={j}"
        )));
    }
    Ok(binomial(n, j) * binomial(j, i) * gamma_kernel(j - i, m - i, r))
}

/// Maximum of a nonnegative size-based weight over unions of k full levels,
/// summed over l-chains inside the union. Ties break to the
/// lexicographically smallest level tuple.
pub fn maximize_level_weight(
    n: usize,
    k: usize,
    l: usize,
    w: &(dyn Fn(&[usize]) -> BigUint + Sync),
) -> Result<(Vec<usize>, CopyCount), ProfileError> {
    if l == 0 || l > k {
        return Err(ProfileError::InvalidParameter("need 1 <= l <= k".into()));
    }
    if k > n + 1 {
        return Err(ProfileError::InvalidParameter(
            "more levels than available".into(),
        ));
    }
    let levels: Vec<usize> = (0..=n).collect();
    let choices = combinations(&levels, k);
    let best = choices
        .into_par_iter()
        .map(|ls| {
            let mut total = BigUint::zero();
            for tuple in combinations(&ls, l) {
                let chains = chains_with_sizes(n, &tuple);
                total += chains * w(&tuple);
            }
            (total, ls)
        })
        .reduce_with(|a, b| if better_arg(&b, &a) { b } else { a })
        .expect("at least one level choice");
    Ok((best.1, best.0))
}

fn better_arg(a: &(BigUint, Vec<usize>), b: &(BigUint, Vec<usize>)) -> bool {
    a.0 > b.0 || (a.0 == b.0 && a.1 < b.1)
}

/// Number of chains F_1 < ... < F_l in 2^[n] with |F_t| = sizes[t].
pub(crate) fn chains_with_sizes(n: usize, sizes: &[usize]) -> BigUint {
    let l = sizes.len();
    let mut res = binomial(n, sizes[l - 1]);
    for t in (1..l).rev() {
        res *= binomial(sizes[t], sizes[t - 1]);
    }
    res
}

/// Exact number of copies of K(parts) in the union of full levels
/// levels[0] < ... < levels[s-1] of [n]. DP over the union size of the sets
/// chosen at the previous level; valid because full levels are symmetric
/// under ground permutations.
pub fn count_multilevel_on_levels(
    parts: &[usize],
    n: usize,
    levels: &[usize],
) -> Result<CopyCount, ProfileError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(ProfileError::InvalidParameter(
            "parts must be positive".into(),
        ));
    }
    if parts.len() != levels.len() {
        return Err(ProfileError::InvalidParameter(
            "one level per part is required".into(),
        ));
    }
    if levels.windows(2).any(|w| w[0] >= w[1]) || levels.iter().any(|&m| m > n) {
        return Err(ProfileError::InvalidParameter(
            "levels must be strictly increasing and at most n".into(),
        ));
    }
    // state: union size after the previous part -> ways
    let mut state: BTreeMap<usize, BigUint> = BTreeMap::new();
    state.insert(0, BigUint::one());
    for (t, (&rt, &mt)) in parts.iter().zip(levels).enumerate() {
        let mut next: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (&u, ways) in &state {
            if mt < u {
                continue;
            }
            // sets at level mt containing the previous union of size u
            // reduce to (mt-u)-subsets of [n-u]
            for j in u.max(mt)..=n {
                let kernel = union_full_kernel(j - u, mt - u, rt);
                if kernel.is_zero() {
                    continue;
                }
                let ways_here = binomial(n - u, j - u) * kernel * ways;
                if !ways_here.is_zero() {
                    *next.entry(j).or_insert_with(BigUint::zero) += ways_here;
                }
            }
        }
        state = next;
        if state.is_empty() {
            let _ = t;
            break;
        }
    }
    Ok(state.into_values().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_copies;
    use crate::poset::Poset;

    #[test]
    fn alpha_profile() {
        let f = SetFamily::full_level(4, 2).unwrap();
        assert_eq!(profile(&f), vec![0, 0, 6, 0, 0]);
    }

    #[test]
    fn chain_profiles() {
        let f = SetFamily::level_union(3, &[1, 2]).unwrap();
        let cp = chain_profile(&f, 2).unwrap();
        assert_eq!(cp.len(), 1);
        assert_eq!(cp[&vec![1, 2]], BigUint::from(6u32));
        let anti = SetFamily::full_level(4, 2).unwrap();
        assert!(chain_profile(&anti, 2).unwrap().is_empty());
        // sums match the chain copy count
        let p2 = Poset::chain(2).unwrap();
        let total: BigUint = cp.values().cloned().sum();
        assert_eq!(total, count_copies(&p2, &f).unwrap());
    }

    #[test]
    fn beta_gamma_examples() {
        let b = beta(&SetFamily::full_level(3, 2).unwrap(), 2, &Budget::default()).unwrap();
        assert_eq!(b[1], BigUint::from(3u32));
        assert_eq!(b[0], BigUint::zero());
        assert_eq!(b[2], BigUint::zero());

        let g = gamma(&SetFamily::full_level(4, 2).unwrap(), 2, &Budget::default()).unwrap();
        assert_eq!(g[&(0, 4)], BigUint::from(3u32));

        // antichains put no mass on j - i <= 1
        for n in 1..=5usize {
            for k in 0..=n {
                let g =
                    gamma(&SetFamily::full_level(n, k).unwrap(), 2, &Budget::default()).unwrap();
                assert!(g.keys().all(|&(i, j)| j >= i + 2));
            }
        }
    }

    #[test]
    fn beta_gamma_sums_and_marginals() {
        let budget = Budget::default();
        for (n, ks) in [(4usize, vec![1usize, 2]), (5, vec![2]), (4, vec![0, 2, 4])] {
            let f = SetFamily::level_union(n, &ks).unwrap();
            for r in 2..=3usize {
                if f.len() < r {
                    continue;
                }
                let b = beta(&f, r, &budget).unwrap();
                let g = gamma(&f, r, &budget).unwrap();
                let total = binomial(f.len(), r);
                let bsum: BigUint = b.iter().cloned().sum();
                let gsum: BigUint = g.values().cloned().sum();
                assert_eq!(bsum, total);
                assert_eq!(gsum, total);
                for (i, bi) in b.iter().enumerate() {
                    let marg: BigUint = g
                        .iter()
                        .filter(|((gi, _), _)| *gi == i)
                        .map(|(_, v)| v.clone())
                        .sum();
                    assert_eq!(&marg, bi);
                }
            }
        }
    }

    #[test]
    fn gamma_level_examples() {
        assert_eq!(gamma_level(4, 2, 2, 0, 4).unwrap(), BigUint::from(3u32));
        assert_eq!(gamma_level(2, 1, 2, 0, 2).unwrap(), BigUint::one());
        for n in 2..=6usize {
            for m in 1..n {
                for i in 0..m {
                    for j in (i + 1..=n).filter(|j| (j - i) % 2 == 1 && m <= *j) {
                        assert_eq!(gamma_level(n, m, 2, i, j).unwrap(), BigUint::zero());
                    }
                }
            }
        }
        assert!(gamma_level(4, 2, 1, 0, 4).is_err());
        assert!(gamma_level(4, 2, 2, 3, 2).is_err());
    }

    #[test]
    fn gamma_level_matches_enumerated_gamma() {
        let budget = Budget::default();
        for n in 1..=6usize {
            for m in 0..=n {
                let f = SetFamily::full_level(n, m).unwrap();
                for r in 2..=3usize {
                    if f.len() < r {
                        continue;
                    }
                    let table = gamma(&f, r, &budget).unwrap();
                    for i in 0..=m {
                        for j in m.max(i + 1)..=n {
                            let formula = gamma_level(n, m, r, i, j).unwrap();
                            let enumerated = table.get(&(i, j)).cloned().unwrap_or_default();
                            assert_eq!(formula, enumerated, "n={n} m={m} r={r} i={i} j={j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kernels_agree_on_overlap() {
        for u in 0..=6usize {
            for mp in 0..=u {
                for r in 3..=4usize {
                    assert_eq!(
                        gamma_kernel_enum(u, mp, r),
                        gamma_kernel_ie(u, mp, r),
                        "u={u} mp={mp} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn union_kernel_small() {
        assert_eq!(union_full_kernel(2, 1, 2), BigUint::one());
        assert_eq!(union_full_kernel(0, 0, 1), BigUint::one());
        assert_eq!(union_full_kernel(0, 0, 2), BigUint::zero());
        // brute check against enumeration
        for u in 0..=5usize {
            for mp in 0..=u {
                for r in 1..=3usize {
                    let members = level_masks(u, mp);
                    let full = crate::family::full_mask(u);
                    let mut count = 0u64;
                    if r <= members.len() {
                        for first in 0..members.len() {
                            let m0 = members[first];
                            rec_subsets(&members, first + 1, r - 1, m0, m0, &mut |_, uni| {
                                if uni == full {
                                    count += 1;
                                }
                            });
                        }
                    }
                    assert_eq!(
                        union_full_kernel(u, mp, r),
                        BigUint::from(count),
                        "u={u} mp={mp} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn beta0_level_values() {
        // three disjoint singleton pairs in [3]
        assert_eq!(beta0_level(3, 1, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(beta0_level(4, 1, 2).unwrap(), BigUint::from(6u32));
        // r = 3 matches a kernel-free enumeration
        let f = SetFamily::full_level(4, 1).unwrap();
        let b = beta(&f, 3, &Budget::default()).unwrap();
        assert_eq!(beta0_level(4, 1, 3).unwrap(), b[0]);
    }

    #[test]
    fn level_weight_examples() {
        // unit weight, one level: the middle binomial, smaller size on ties
        let (levels, value) = maximize_level_weight(5, 1, 1, &|_s| BigUint::one()).unwrap();
        assert_eq!(levels, vec![2]);
        assert_eq!(value, binomial(5, 2));

        let w = |s: &[usize]| {
            let i = s[0];
            crate::binom::binomial_of_big(&binomial(i, i / 2), 2)
        };
        let (levels, value) = maximize_level_weight(3, 1, 1, &w).unwrap();
        assert_eq!(value, BigUint::from(3u32));
        assert_eq!(levels, vec![2]);

        let (levels, value) = maximize_level_weight(3, 2, 2, &|_s| BigUint::one()).unwrap();
        assert_eq!(levels, vec![1, 2]);
        assert_eq!(value, BigUint::from(6u32));
    }

    #[test]
    fn bundle_is_consistent() {
        let f = SetFamily::level_union(4, &[1, 2]).unwrap();
        let b = profile_bundle(&f, 2, &[2, 3], &Budget::default()).unwrap();
        assert_eq!(b.alpha.iter().sum::<u64>(), f.len() as u64);
        assert_eq!(b.chain_profile, chain_profile(&f, 2).unwrap());
        for r in [2usize, 3] {
            let total: BigUint = b.beta[&r].iter().cloned().sum();
            assert_eq!(total, binomial(f.len(), r));
            let total: BigUint = b.gamma[&r].values().cloned().sum();
            assert_eq!(total, binomial(f.len(), r));
        }
    }

    #[test]
    fn multilevel_dp_examples() {
        assert_eq!(
            count_multilevel_on_levels(&[2, 2], 4, &[1, 3]).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            count_multilevel_on_levels(&[1, 2, 1], 2, &[0, 1, 2]).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            count_multilevel_on_levels(&[1, 1], 3, &[1, 2]).unwrap(),
            BigUint::from(6u32)
        );
        // single part reduces to a binomial of the level size
        for n in 0..=5usize {
            for m in 0..=n {
                for r in 1..=3usize {
                    let dp = count_multilevel_on_levels(&[r], n, &[m]).unwrap();
                    assert_eq!(dp, crate::binom::binomial_of_big(&binomial(n, m), r));
                }
            }
        }
        assert!(count_multilevel_on_levels(&[1, 1], 3, &[2, 1]).is_err());
        assert!(count_multilevel_on_levels(&[1, 0], 3, &[1, 2]).is_err());
    }
}
