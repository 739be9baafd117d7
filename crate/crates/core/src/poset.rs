//! Finite strict partial orders.
//!
//! Elements are unlabeled indices `0..m`. The relation is kept transitively
//! closed so that embedding tests are single matrix lookups. Named posets fix
//! a canonical element order, documented on each constructor.

use thiserror::Error;

/// Largest poset accepted by the brute-force isomorphism check.
pub const ISO_SIZE_GUARD: usize = 12;

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("parameter must be at least 1, got {0}")]
    NonPositiveParameter(usize),
    #[error("this operation rejects the empty poset")]
    EmptyPoset,
    #[error("isomorphism size guard exceeded: {size} elements, limit {limit}")]
    SizeGuard { size: usize, limit: usize },
}

#[derive(Clone, Debug)]
pub struct Poset {
    m: usize,
    /// rel[x * m + y] is true iff x is strictly below y. Irreflexive,
    /// antisymmetric, transitively closed.
    rel: Vec<bool>,
    expr: Option<String>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.rel == other.rel
    }
}
impl Eq for Poset {}

impl Poset {
    fn from_cover_pairs(m: usize, pairs: &[(usize, usize)], expr: Option<String>) -> Poset {
        let mut rel = vec![false; m * m];
        for &(x, y) in pairs {
            debug_assert!(x < m && y < m && x != y);
            rel[x * m + y] = true;
        }
        // transitive closure
        for k in 0..m {
            for i in 0..m {
                if rel[i * m + k] {
                    for j in 0..m {
                        if rel[k * m + j] {
                            rel[i * m + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..m {
            assert!(!rel[x * m + x], "relation contains a cycle");
        }
        Poset { m, rel, expr }
    }

    /// The empty poset; legal only as an operand of `otimes`/`oplus`.
    pub fn empty() -> Poset {
        Poset {
            m: 0,
            rel: Vec::new(),
            expr: Some("0".into()),
        }
    }

    /// Complete multi-level poset K(r_1,...,r_s): levels are consecutive index
    /// blocks, lowest level first, and x < y iff level(x) < level(y).
    pub fn complete_multilevel(parts: &[usize]) -> Result<Poset, PosetError> {
        if parts.is_empty() {
            return Err(PosetError::NonPositiveParameter(0));
        }
        for &r in parts {
            if r == 0 {
                return Err(PosetError::NonPositiveParameter(0));
            }
        }
        let m: usize = parts.iter().sum();
        let mut level = Vec::with_capacity(m);
        for (t, &r) in parts.iter().enumerate() {
            level.extend(std::iter::repeat_n(t, r));
        }
        let mut pairs = Vec::new();
        for x in 0..m {
            for y in 0..m {
                if level[x] < level[y] {
                    pairs.push((x, y));
                }
            }
        }
        let expr = format!(
            "K({})",
            parts
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        Ok(Poset::from_cover_pairs(m, &pairs, Some(expr)))
    }

    /// Chain with k elements, 0 < 1 < ... < k-1.
    pub fn chain(k: usize) -> Result<Poset, PosetError> {
        let mut p = Poset::complete_multilevel(&vec![1; k])?;
        p.expr = Some(format!("P{k}"));
        Ok(p)
    }

    /// r pairwise-incomparable elements.
    pub fn antichain(r: usize) -> Result<Poset, PosetError> {
        let mut p = Poset::complete_multilevel(&[r])?;
        p.expr = Some(format!("AC{r}"));
        Ok(p)
    }

    /// Element 0 below the antichain 1..=r.
    pub fn vee(r: usize) -> Result<Poset, PosetError> {
        let mut p = Poset::complete_multilevel(&[1, r])?;
        p.expr = Some(format!("V{r}"));
        Ok(p)
    }

    /// Antichain 0..r-1 below the single element r.
    pub fn wedge(r: usize) -> Result<Poset, PosetError> {
        let mut p = Poset::complete_multilevel(&[r, 1])?;
        p.expr = Some(format!("A{r}"));
        Ok(p)
    }

    /// Diamond: 0 below the antichain 1..=k below k+1.
    pub fn diamond(k: usize) -> Result<Poset, PosetError> {
        let mut p = Poset::complete_multilevel(&[1, k, 1])?;
        p.expr = Some(format!("D{k}"));
        Ok(p)
    }

    /// Four elements a,b,c,d = 0,1,2,3 with a<c, b<c, b<d.
    pub fn n_poset() -> Poset {
        Poset::from_cover_pairs(4, &[(0, 2), (1, 2), (1, 3)], Some("N".into()))
    }

    /// Butterfly: 0,1 both below 2,3.
    pub fn butterfly() -> Poset {
        let mut p = Poset::complete_multilevel(&[2, 2]).unwrap();
        p.expr = Some("B".into());
        p
    }

    /// Five elements a..e = 0..4 with a<c, a<e, b<c, b<d, d<e.
    pub fn butterfly_plus() -> Poset {
        Poset::from_cover_pairs(
            5,
            &[(0, 2), (0, 4), (1, 2), (1, 3), (3, 4)],
            Some("B+".into()),
        )
    }

    /// Five elements a..e = 0..4 with a,b<c,d and d<e.
    pub fn butterfly_plus_plus() -> Poset {
        Poset::from_cover_pairs(
            5,
            &[(0, 2), (0, 3), (1, 2), (1, 3), (3, 4)],
            Some("B++".into()),
        )
    }

    /// Insert an r-antichain between self and `upper`: every element of self
    /// is below every middle element, every middle element is below every
    /// element of `upper`. Either operand may be empty.
    pub fn otimes(&self, r: usize, upper: &Poset) -> Result<Poset, PosetError> {
        if r == 0 {
            return Err(PosetError::NonPositiveParameter(0));
        }
        let a = self.m;
        let b = upper.m;
        let m = a + r + b;
        let mut pairs = Vec::new();
        for x in 0..a {
            for y in 0..a {
                if self.lt(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        for x in 0..b {
            for y in 0..b {
                if upper.lt(x, y) {
                    pairs.push((a + r + x, a + r + y));
                }
            }
        }
        for x in 0..a {
            for k in 0..r {
                pairs.push((x, a + k));
            }
        }
        for k in 0..r {
            for y in 0..b {
                pairs.push((a + k, a + r + y));
            }
        }
        let expr = match (&self.expr, &upper.expr) {
            (Some(l), Some(u)) => Some(format!("otimes({l},{r},{u})")),
            _ => None,
        };
        Ok(Poset::from_cover_pairs(m, &pairs, expr))
    }

    /// Append an r-antichain above self.
    pub fn oplus(&self, r: usize) -> Result<Poset, PosetError> {
        let mut p = self.otimes(r, &Poset::empty())?;
        if let Some(l) = &self.expr {
            p.expr = Some(format!("oplus({l},{r})"));
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// x strictly below y.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.rel[x * self.m + y]
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) || self.lt(y, x)
    }

    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.m {
            for y in 0..self.m {
                if self.lt(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn relation_count(&self) -> usize {
        self.rel.iter().filter(|&&b| b).count()
    }

    pub fn below_count(&self, x: usize) -> usize {
        (0..self.m).filter(|&y| self.lt(y, x)).count()
    }

    pub fn above_count(&self, x: usize) -> usize {
        (0..self.m).filter(|&y| self.lt(x, y)).count()
    }

    /// Longest chain ending at each element, 1-based. Empty for the empty poset.
    fn level_of(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_by_key(|&x| self.below_count(x));
        let mut lvl = vec![1usize; self.m];
        for &x in &order {
            for y in 0..self.m {
                if self.lt(y, x) {
                    lvl[x] = lvl[x].max(lvl[y] + 1);
                }
            }
        }
        lvl
    }

    /// Number of elements in a longest chain; 0 for the empty poset.
    pub fn height(&self) -> usize {
        self.level_of().into_iter().max().unwrap_or(0)
    }

    /// All pairs comparable (true for 0- and 1-element posets).
    pub fn is_chain(&self) -> bool {
        for x in 0..self.m {
            for y in x + 1..self.m {
                if !self.comparable(x, y) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_antichain(&self) -> bool {
        self.relation_count() == 0
    }

    /// Level sizes (r_1,...,r_s) when self is a complete multi-level poset,
    /// i.e. x < y holds exactly when x's level is lower than y's.
    pub fn multilevel_parts(&self) -> Option<Vec<usize>> {
        if self.m == 0 {
            return None;
        }
        let lvl = self.level_of();
        let s = *lvl.iter().max().unwrap();
        for x in 0..self.m {
            for y in 0..self.m {
                if self.lt(x, y) != (lvl[x] < lvl[y]) {
                    return None;
                }
            }
        }
        let mut parts = vec![0usize; s];
        for &l in &lvl {
            parts[l - 1] += 1;
        }
        Some(parts)
    }

    /// Canonical rendering in the small poset language, when known.
    pub fn expr(&self) -> Option<&str> {
        self.expr.as_deref()
    }

    /// True iff a relation-preserving-and-reflecting bijection onto `other`
    /// exists. Brute force with degree-signature pruning; guarded by
    /// [`ISO_SIZE_GUARD`].
    pub fn is_isomorphic(&self, other: &Poset) -> Result<bool, PosetError> {
        self.is_isomorphic_bounded(other, ISO_SIZE_GUARD)
    }

    pub fn is_isomorphic_bounded(&self, other: &Poset, limit: usize) -> Result<bool, PosetError> {
        let size = self.m.max(other.m);
        if size > limit {
            return Err(PosetError::SizeGuard { size, limit });
        }
        if self.m != other.m || self.relation_count() != other.relation_count() {
            return Ok(false);
        }
        let mut sa: Vec<(usize, usize)> = (0..self.m)
            .map(|x| (self.below_count(x), self.above_count(x)))
            .collect();
        let mut sb: Vec<(usize, usize)> = (0..other.m)
            .map(|x| (other.below_count(x), other.above_count(x)))
            .collect();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(false);
        }
        Ok(iso_search(self, other, false) > 0)
    }

    /// Size of the automorphism group, by exhaustive bijection search.
    pub fn automorphism_count(&self) -> Result<u64, PosetError> {
        if self.m > ISO_SIZE_GUARD {
            return Err(PosetError::SizeGuard {
                size: self.m,
                limit: ISO_SIZE_GUARD,
            });
        }
        if self.m == 0 {
            return Ok(1);
        }
        Ok(iso_search(self, self, true))
    }
}

/// Count isomorphisms from p to q; with `count_all` false, stop at the first.
fn iso_search(p: &Poset, q: &Poset, count_all: bool) -> u64 {
    let m = p.len();
    let ctx = IsoCtx {
        p,
        q,
        psig: (0..m)
            .map(|x| (p.below_count(x), p.above_count(x)))
            .collect(),
        qsig: (0..m)
            .map(|x| (q.below_count(x), q.above_count(x)))
            .collect(),
        count_all,
    };
    let mut image = vec![usize::MAX; m];
    let mut used = vec![false; m];
    ctx.rec(0, &mut image, &mut used)
}

struct IsoCtx<'a> {
    p: &'a Poset,
    q: &'a Poset,
    psig: Vec<(usize, usize)>,
    qsig: Vec<(usize, usize)>,
    count_all: bool,
}

impl IsoCtx<'_> {
    fn rec(&self, x: usize, image: &mut [usize], used: &mut [bool]) -> u64 {
        let m = self.p.len();
        if x == m {
            return 1;
        }
        let mut total = 0;
        for y in 0..m {
            if used[y] || self.psig[x] != self.qsig[y] {
                continue;
            }
            let ok = (0..x).all(|x2| {
                self.p.lt(x, x2) == self.q.lt(y, image[x2])
                    && self.p.lt(x2, x) == self.q.lt(image[x2], y)
            });
            if ok {
                image[x] = y;
                used[y] = true;
                total += self.rec(x + 1, image, used);
                used[y] = false;
                image[x] = usize::MAX;
                if total > 0 && !self.count_all {
                    return total;
                }
            }
        }
        total
    }
}
