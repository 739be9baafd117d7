//! Deciding freeness and counting copies of a poset in a family.
//!
//! A copy of Q in F is a subfamily G with a bijection phi from Q's elements
//! onto G such that x < y in Q forces phi(x) to be a proper subset of phi(y).
//! Non-relations of Q impose no constraint. Copies are counted at the
//! subfamily level: a subfamily counts once no matter how many bijections
//! realize it.

use crate::binom::binomial;
use crate::family::{is_proper_subset, SetFamily};
use crate::poset::Poset;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

pub type CopyCount = BigUint;

/// Node budget for embedding searches and r-subset enumerations. Exceeding
/// it is an explicit error, never a silent truncation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 200_000_000,
        }
    }
}

impl Budget {
    pub fn new(max_nodes: u64) -> Budget {
        Budget { max_nodes }
    }

    pub fn unlimited() -> Budget {
        Budget {
            max_nodes: u64::MAX,
        }
    }
}

#[derive(Debug, Error)]
pub enum CountError {
    #[error("the empty poset is only meaningful as a composition operand")]
    EmptyPoset,
    #[error("embedding budget exceeded after {explored} nodes")]
    BudgetExceeded { explored: u64 },
}

/// Search order over Q's elements: start at a maximum-degree element, then
/// repeatedly take the element with the most already-placed neighbors in the
/// order relation (ties by total degree, then index).
fn element_order(q: &Poset, first: Option<usize>) -> Vec<usize> {
    let m = q.len();
    let deg: Vec<usize> = (0..m)
        .map(|x| q.below_count(x) + q.above_count(x))
        .collect();
    let mut placed = vec![false; m];
    let mut order = Vec::with_capacity(m);
    let start = first.unwrap_or_else(|| {
        (0..m)
            .max_by_key(|&x| (deg[x], std::cmp::Reverse(x)))
            .unwrap()
    });
    placed[start] = true;
    order.push(start);
    while order.len() < m {
        let next = (0..m)
            .filter(|&x| !placed[x])
            .max_by_key(|&x| {
                let anchored = order.iter().filter(|&&y| q.comparable(x, y)).count();
                (anchored, deg[x], std::cmp::Reverse(x))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Per search position: constraints against earlier positions.
/// (earlier_pos, true) means members[earlier] must be a proper subset of the
/// candidate; (earlier_pos, false) the reverse.
fn position_constraints(q: &Poset, order: &[usize]) -> Vec<Vec<(usize, bool)>> {
    let m = order.len();
    let mut cons = vec![Vec::new(); m];
    for p in 0..m {
        for e in 0..p {
            if q.lt(order[e], order[p]) {
                cons[p].push((e, true));
            } else if q.lt(order[p], order[e]) {
                cons[p].push((e, false));
            }
        }
    }
    cons
}

struct Engine<'a> {
    members: &'a [u32],
    cons: Vec<Vec<(usize, bool)>>,
    nodes: u64,
    max_nodes: u64,
    /// When set, position 0 may only take this member index.
    forced_first: Option<usize>,
}

enum Flow {
    Continue,
    Stop,
}

impl<'a> Engine<'a> {
    fn admissible(&self, picked: &[usize], pos: usize, cand: usize) -> bool {
        let cm = self.members[cand];
        for &(e, below) in &self.cons[pos] {
            let em = self.members[picked[e]];
            let ok = if below {
                is_proper_subset(em, cm)
            } else {
                is_proper_subset(cm, em)
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Depth-first over positions; candidates tried in member-index order, so
    /// complete embeddings appear in lexicographic order of their index
    /// sequence.
    fn search(
        &mut self,
        picked: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> Flow,
    ) -> Result<Flow, CountError> {
        let pos = picked.len();
        if pos == self.cons.len() {
            return Ok(visit(picked));
        }
        let range: Box<dyn Iterator<Item = usize>> = match (pos, self.forced_first) {
            (0, Some(idx)) => Box::new(std::iter::once(idx)),
            _ => Box::new(0..self.members.len()),
        };
        for cand in range {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(CountError::BudgetExceeded {
                    explored: self.nodes,
                });
            }
            if used[cand] || !self.admissible(picked, pos, cand) {
                continue;
            }
            used[cand] = true;
            picked.push(cand);
            let flow = self.search(picked, used, visit)?;
            picked.pop();
            used[cand] = false;
            if let Flow::Stop = flow {
                return Ok(Flow::Stop);
            }
        }
        Ok(Flow::Continue)
    }
}

fn run_engine(
    q: &Poset,
    members: &[u32],
    budget: &Budget,
    forced_first_member: Option<usize>,
    forced_first_element: Option<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Flow,
) -> Result<(), CountError> {
    if q.len() > members.len() {
        return Ok(());
    }
    let order = element_order(q, forced_first_element);
    let cons = position_constraints(q, &order);
    let mut engine = Engine {
        members,
        cons,
        nodes: 0,
        max_nodes: budget.max_nodes,
        forced_first: forced_first_member,
    };
    let mut picked = Vec::with_capacity(q.len());
    let mut used = vec![false; members.len()];
    engine.search(&mut picked, &mut used, visit)?;
    Ok(())
}

/// All injective order-preserving maps from Q into G, one vector per
/// embedding, indexed by Q element.
pub fn embeddings(q: &Poset, g: &SetFamily, budget: &Budget) -> Result<Vec<Vec<u32>>, CountError> {
    if q.is_empty() {
        return Err(CountError::EmptyPoset);
    }
    let order = element_order(q, None);
    let mut out = Vec::new();
    run_engine(q, g.members(), budget, None, None, &mut |picked| {
        let mut by_element = vec![0u32; q.len()];
        for (pos, &idx) in picked.iter().enumerate() {
            by_element[order[pos]] = g.members()[idx];
        }
        out.push(by_element);
        Flow::Continue
    })?;
    Ok(out)
}

pub fn contains_copy(p: &Poset, f: &SetFamily) -> Result<bool, CountError> {
    if p.is_empty() {
        return Err(CountError::EmptyPoset);
    }
    exists_embedding(p, f.members(), None)
}

/// Freeness with respect to every poset in the list.
pub fn is_free(forbidden: &[Poset], f: &SetFamily) -> Result<bool, CountError> {
    for p in forbidden {
        if contains_copy(p, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn exists_embedding(
    p: &Poset,
    members: &[u32],
    forced: Option<(usize, usize)>, // (element, member index)
) -> Result<bool, CountError> {
    let mut found = false;
    let (fe, fm) = match forced {
        Some((e, m)) => (Some(e), Some(m)),
        None => (None, None),
    };
    run_engine(p, members, &Budget::unlimited(), fm, fe, &mut |_| {
        found = true;
        Flow::Stop
    })?;
    Ok(found)
}

/// Does adding members[new_idx] create a copy of p through that set?
/// Every anchor element of p is tried as the image of the new set.
pub(crate) fn creates_copy_through(p: &Poset, members: &[u32], new_idx: usize) -> bool {
    for anchor in 0..p.len() {
        if exists_embedding(p, members, Some((anchor, new_idx))).unwrap_or(false) {
            return true;
        }
    }
    false
}

pub fn count_copies(q: &Poset, f: &SetFamily) -> Result<CopyCount, CountError> {
    count_copies_with(q, f, &Budget::default())
}

/// Number of |Q|-element subfamilies of F admitting an embedding of Q.
/// Chains and antichains take fast paths; both agree with the generic
/// engine (tested exhaustively for small ground sets).
pub fn count_copies_with(
    q: &Poset,
    f: &SetFamily,
    budget: &Budget,
) -> Result<CopyCount, CountError> {
    if q.is_empty() {
        return Err(CountError::EmptyPoset);
    }
    if q.len() > f.len() {
        return Ok(BigUint::zero());
    }
    if q.is_chain() {
        return Ok(count_chains(f, q.len()));
    }
    if q.is_antichain() {
        // weak copies: any |Q|-subfamily works
        return Ok(binomial(f.len(), q.len()));
    }
    count_copies_generic_with(q, f, budget)
}

/// The generic engine without fast paths; exposed for cross-checking.
pub fn count_copies_generic_with(
    q: &Poset,
    f: &SetFamily,
    budget: &Budget,
) -> Result<CopyCount, CountError> {
    if q.is_empty() {
        return Err(CountError::EmptyPoset);
    }
    let members = f.members();
    let order = element_order(q, None);
    let cons = position_constraints(q, &order);
    let m = q.len();
    let mut count = BigUint::zero();
    // reused scratch for the per-embedding minimality check
    let mut image = Vec::with_capacity(m);
    let mut target = Vec::with_capacity(m);
    let mut chosen = Vec::with_capacity(m);
    let mut masks = Vec::with_capacity(m);
    let mut used = vec![false; m];
    run_engine(q, members, budget, None, None, &mut |picked| {
        // count the subfamily only on its lexicographically first embedding
        image.clear();
        image.extend_from_slice(picked);
        image.sort_unstable();
        target.clear();
        target.extend(picked.iter().map(|&i| image.binary_search(&i).unwrap()));
        masks.clear();
        masks.extend(image.iter().map(|&i| members[i]));
        chosen.clear();
        used.iter_mut().for_each(|u| *u = false);
        if !smaller_exists(&cons, &masks, &target, &mut chosen, &mut used, true) {
            count += BigUint::one();
        }
        Flow::Continue
    })?;
    Ok(count)
}

/// Is there an embedding onto the same image with a lexicographically
/// smaller index sequence than `target`?
fn smaller_exists(
    cons: &[Vec<(usize, bool)>],
    masks: &[u32],
    target: &[usize],
    chosen: &mut Vec<usize>,
    used: &mut [bool],
    still_eq: bool,
) -> bool {
    let pos = chosen.len();
    if pos == target.len() {
        return !still_eq;
    }
    let limit = if still_eq {
        target[pos]
    } else {
        masks.len() - 1
    };
    'cands: for cand in 0..=limit {
        if used[cand] {
            continue;
        }
        let cm = masks[cand];
        for &(e, below) in &cons[pos] {
            let em = masks[chosen[e]];
            let ok = if below {
                is_proper_subset(em, cm)
            } else {
                is_proper_subset(cm, em)
            };
            if !ok {
                continue 'cands;
            }
        }
        let next_eq = still_eq && cand == target[pos];
        used[cand] = true;
        chosen.push(cand);
        let found = smaller_exists(cons, masks, target, chosen, used, next_eq);
        chosen.pop();
        used[cand] = false;
        if found {
            return true;
        }
    }
    false
}

/// Chains under inclusion via DP over a size-sorted order.
fn count_chains(f: &SetFamily, k: usize) -> CopyCount {
    let members = f.members();
    if k == 0 || k > members.len() {
        return BigUint::zero();
    }
    let order = f.indices_by_size();
    // dp[i] = chains of the current length ending at member i
    let mut dp: Vec<BigUint> = vec![BigUint::one(); members.len()];
    for _ in 1..k {
        let mut next: Vec<BigUint> = vec![BigUint::zero(); members.len()];
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[..pos] {
                if is_proper_subset(members[j], members[i]) {
                    next[i] += &dp[j];
                }
            }
        }
        dp = next;
    }
    dp.into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poset;

    fn fam(n: usize, members: &[u32]) -> SetFamily {
        SetFamily::new(n, members.to_vec()).unwrap()
    }

    #[test]
    fn embeddings_examples() {
        let n = Poset::n_poset();
        let chain4 = fam(3, &[0b000, 0b001, 0b011, 0b111]);
        assert!(!embeddings(&n, &chain4, &Budget::default())
            .unwrap()
            .is_empty());

        // two bottoms and two tops, all cross inclusions hold
        let bshape = fam(4, &[0b0001, 0b0010, 0b0111, 0b1011]);
        assert_eq!(
            embeddings(&n, &bshape, &Budget::default()).unwrap().len(),
            4
        );

        let p2 = Poset::chain(2).unwrap();
        let incomparable = fam(2, &[0b01, 0b10]);
        assert!(embeddings(&p2, &incomparable, &Budget::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn count_examples() {
        let p2 = Poset::chain(2).unwrap();
        let all2 = SetFamily::power_set(2).unwrap();
        assert_eq!(count_copies(&p2, &all2).unwrap(), BigUint::from(5u32));

        let n = Poset::n_poset();
        let chain4 = fam(3, &[0b000, 0b001, 0b011, 0b111]);
        assert_eq!(count_copies(&n, &chain4).unwrap(), BigUint::one());

        let d2 = Poset::diamond(2).unwrap();
        assert_eq!(count_copies(&d2, &all2).unwrap(), BigUint::one());
    }

    #[test]
    fn freeness_examples() {
        let p3 = Poset::chain(3).unwrap();
        assert!(!contains_copy(&p3, &SetFamily::level_union(4, &[1, 2]).unwrap()).unwrap());

        let b = Poset::butterfly();
        assert!(contains_copy(&b, &SetFamily::level_union(5, &[1, 2, 3]).unwrap()).unwrap());

        // the two-layer V/A-free construction on [3]
        let kt = fam(3, &[0b001, 0b010, 0b101, 0b110]);
        let forb = [Poset::vee(2).unwrap(), Poset::wedge(2).unwrap()];
        assert!(is_free(&forb, &kt).unwrap());
    }

    #[test]
    fn empty_poset_rejected() {
        let e = Poset::empty();
        let f = SetFamily::power_set(2).unwrap();
        assert!(count_copies(&e, &f).is_err());
        assert!(contains_copy(&e, &f).is_err());
        assert!(embeddings(&e, &f, &Budget::default()).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let b = Poset::butterfly();
        let f = SetFamily::level_union(4, &[1, 2, 3]).unwrap();
        let tiny = Budget::new(5);
        assert!(matches!(
            count_copies_generic_with(&b, &f, &tiny),
            Err(CountError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn chain_specialization() {
        // P1 counts members, P2 counts comparable pairs
        for fam_masks in [
            &[0b01u32, 0b10, 0b11][..],
            &[0b000, 0b001, 0b011, 0b111][..],
        ] {
            let f = fam(3, fam_masks);
            let p1 = Poset::chain(1).unwrap();
            assert_eq!(count_copies(&p1, &f).unwrap(), BigUint::from(f.len()));
            let p2 = Poset::chain(2).unwrap();
            let direct: u64 = {
                let ms = f.members();
                let mut c = 0;
                for i in 0..ms.len() {
                    for j in i + 1..ms.len() {
                        if is_proper_subset(ms[i], ms[j]) || is_proper_subset(ms[j], ms[i]) {
                            c += 1;
                        }
                    }
                }
                c
            };
            assert_eq!(count_copies(&p2, &f).unwrap(), BigUint::from(direct));
        }
    }

    #[test]
    fn fast_paths_match_generic_exhaustively() {
        // chains P1..P4 and antichains AC2..AC4, over every family on a
        // ground set of up to four elements
        let mut posets = Vec::new();
        for k in 1..=4 {
            posets.push(parse_poset(&format!("P{k}")).unwrap());
            if k >= 2 {
                posets.push(parse_poset(&format!("AC{k}")).unwrap());
            }
        }
        let budget = Budget::default();
        for n in 0..=4usize {
            let slots = 1u64 << (1 << n);
            for famset in 0..slots {
                let members: Vec<u32> = (0..(1u32 << n)).filter(|b| famset >> b & 1 == 1).collect();
                let f = fam(n, &members);
                for q in &posets {
                    if q.len() > f.len() {
                        continue;
                    }
                    let fast = count_copies(q, &f).unwrap();
                    let generic = count_copies_generic_with(q, &f, &budget).unwrap();
                    assert_eq!(fast, generic, "poset {:?} family {:?}", q.expr(), members);
                }
            }
        }
    }

    #[test]
    fn monotone_under_adding_sets() {
        let q = parse_poset("V2").unwrap();
        let base = fam(3, &[0b001, 0b011, 0b101]);
        let before = count_copies(&q, &base).unwrap();
        for extra in 0u32..8 {
            if base.contains(extra) {
                continue;
            }
            let bigger = base.with_member(extra).unwrap();
            assert!(count_copies(&q, &bigger).unwrap() >= before);
        }
    }
}
