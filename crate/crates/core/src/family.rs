//! Families of subsets of [n] = {1,...,n}, bit-encoded.
//!
//! Element e of the ground set is bit e-1 of a mask. Members are kept
//! strictly sorted by mask value, which fixes iteration order, witness
//! output and tie-breaking everywhere downstream.

use thiserror::Error;

/// Hard cap on the ground-set size. A guard, not a format limit.
pub const MAX_GROUND: usize = 30;

/// Guard for materializing a full power set.
const MAX_POWER_SET_GROUND: usize = 20;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("ground-set size {0} exceeds the cap {MAX_GROUND}")]
    GroundTooLarge(usize),
    #[error("level {k} out of range for ground-set size {n}")]
    LevelOutOfRange { n: usize, k: usize },
    #[error("member {mask:#x} is not a subset of [{n}]")]
    MemberOutOfRange { n: usize, mask: u32 },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("power set of [{0}] is too large to materialize")]
    PowerSetTooLarge(usize),
    #[error("bad family text: {0}")]
    BadText(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyTextFormat {
    /// One set per line as "1,3,4"; "-" stands for the empty set.
    Elements,
    /// One set per line as a hex mask, "0x0D".
    HexMask,
}

impl SetFamily {
    /// Builds a family from masks; sorts and drops duplicates.
    pub fn new(n: usize, mut members: Vec<u32>) -> Result<SetFamily, FamilyError> {
        if n > MAX_GROUND {
            return Err(FamilyError::GroundTooLarge(n));
        }
        let full = full_mask(n);
        for &m in &members {
            if m & !full != 0 {
                return Err(FamilyError::MemberOutOfRange { n, mask: m });
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { n, members })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, members: Vec<u32>) -> SetFamily {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetFamily { n, members }
    }

    pub fn empty(n: usize) -> SetFamily {
        SetFamily {
            n,
            members: Vec::new(),
        }
    }

    /// All k-subsets of [n].
    pub fn full_level(n: usize, k: usize) -> Result<SetFamily, FamilyError> {
        if n > MAX_GROUND {
            return Err(FamilyError::GroundTooLarge(n));
        }
        if k > n {
            return Err(FamilyError::LevelOutOfRange { n, k });
        }
        Ok(SetFamily {
            n,
            members: level_masks(n, k),
        })
    }

    /// Union of the named levels.
    pub fn level_union(n: usize, ks: &[usize]) -> Result<SetFamily, FamilyError> {
        if n > MAX_GROUND {
            return Err(FamilyError::GroundTooLarge(n));
        }
        let mut members = Vec::new();
        let mut seen = vec![false; n + 1];
        for &k in ks {
            if k > n {
                return Err(FamilyError::LevelOutOfRange { n, k });
            }
            if !seen[k] {
                seen[k] = true;
                members.extend(level_masks(n, k));
            }
        }
        members.sort_unstable();
        Ok(SetFamily { n, members })
    }

    pub fn power_set(n: usize) -> Result<SetFamily, FamilyError> {
        if n > MAX_POWER_SET_GROUND {
            return Err(FamilyError::PowerSetTooLarge(n));
        }
        Ok(SetFamily {
            n,
            members: (0..(1u32 << n)).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn full_mask(&self) -> u32 {
        full_mask(self.n)
    }

    /// Self plus one more set.
    pub fn with_member(&self, mask: u32) -> Result<SetFamily, FamilyError> {
        let mut members = self.members.clone();
        members.push(mask);
        SetFamily::new(self.n, members)
    }

    /// Sizes histogram, indices 0..=n.
    pub fn size_profile(&self) -> Vec<u64> {
        let mut alpha = vec![0u64; self.n + 1];
        for &m in &self.members {
            alpha[m.count_ones() as usize] += 1;
        }
        alpha
    }

    pub fn is_antichain(&self) -> bool {
        for (i, &a) in self.members.iter().enumerate() {
            for &b in &self.members[i + 1..] {
                if a & b == a || a & b == b {
                    return false;
                }
            }
        }
        true
    }

    /// No chain of k+1 mutually inclusive members.
    pub fn is_k_sperner(&self, k: usize) -> Result<bool, FamilyError> {
        if k == 0 {
            return Err(FamilyError::ZeroK);
        }
        Ok(self.longest_chain() <= k)
    }

    /// Number of members in a longest chain under strict inclusion.
    pub fn longest_chain(&self) -> usize {
        let order = self.indices_by_size();
        let mut dp = vec![1usize; self.members.len()];
        let mut best = 0;
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[..pos] {
                if is_proper_subset(self.members[j], self.members[i]) {
                    dp[i] = dp[i].max(dp[j] + 1);
                }
            }
            best = best.max(dp[i]);
        }
        best
    }

    /// Indices sorted by (popcount, mask); a linear extension of inclusion.
    pub(crate) fn indices_by_size(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.members.len()).collect();
        idx.sort_by_key(|&i| (self.members[i].count_ones(), self.members[i]));
        idx
    }

    /// Antichain layers obtained by repeatedly removing minimal members.
    pub fn canonical_partition(&self) -> Vec<SetFamily> {
        let mut remaining: Vec<u32> = self.members.clone();
        let mut parts = Vec::new();
        while !remaining.is_empty() {
            let minimal: Vec<u32> = remaining
                .iter()
                .copied()
                .filter(|&a| !remaining.iter().any(|&b| is_proper_subset(b, a)))
                .collect();
            remaining.retain(|m| !minimal.contains(m));
            parts.push(SetFamily::from_sorted_unchecked(self.n, minimal));
        }
        parts
    }

    /// {[n] \ F : F in self}; an involution.
    pub fn complement_family(&self) -> SetFamily {
        let full = self.full_mask();
        let mut members: Vec<u32> = self.members.iter().map(|&m| full & !m).collect();
        members.sort_unstable();
        SetFamily { n: self.n, members }
    }

    /// Connected components of the comparability graph, ordered by their
    /// smallest member.
    pub fn comparability_components(&self) -> Vec<SetFamily> {
        let m = self.members.len();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = (self.members[i], self.members[j]);
                if a & b == a || a & b == b {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<u32>> = Default::default();
        for i in 0..m {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(self.members[i]);
        }
        let mut comps: Vec<SetFamily> = groups
            .into_values()
            .map(|v| SetFamily::from_sorted_unchecked(self.n, v))
            .collect();
        comps.sort_by_key(|f| f.members.first().copied().unwrap_or(0));
        comps
    }

    pub fn to_text(&self, format: FamilyTextFormat) -> String {
        let mut out = format!("n={}\n", self.n);
        for &m in &self.members {
            match format {
                FamilyTextFormat::Elements => {
                    out.push_str(&set_to_string(m));
                }
                FamilyTextFormat::HexMask => {
                    out.push_str(&format!("0x{m:02X}"));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str, format: FamilyTextFormat) -> Result<SetFamily, FamilyError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| FamilyError::BadText("empty input".into()))?;
        let n: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| FamilyError::BadText(format!("bad header line '{header}'")))?;
        let mut members = Vec::new();
        for line in lines {
            let mask = match format {
                FamilyTextFormat::Elements => parse_set_line(line, n)?,
                FamilyTextFormat::HexMask => {
                    let hex = line
                        .strip_prefix("0x")
                        .or_else(|| line.strip_prefix("0X"))
                        .ok_or_else(|| FamilyError::BadText(format!("bad hex line '{line}'")))?;
                    u32::from_str_radix(hex, 16)
                        .map_err(|_| FamilyError::BadText(format!("bad hex line '{line}'")))?
                }
            };
            members.push(mask);
        }
        SetFamily::new(n, members)
    }
}

pub fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

/// All k-subset masks of [n], ascending.
pub fn level_masks(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let full = full_mask(n);
    for m in 0..=full {
        if m.count_ones() as usize == k {
            out.push(m);
        }
    }
    if n == 0 && k == 0 {
        out.push(0);
        out.dedup();
    }
    out
}

pub fn is_proper_subset(a: u32, b: u32) -> bool {
    a & b == a && a != b
}

/// "1,3,4" with elements ascending; "-" for the empty set.
pub fn set_to_string(mask: u32) -> String {
    if mask == 0 {
        return "-".into();
    }
    let mut parts = Vec::new();
    for e in 0..32 {
        if mask >> e & 1 == 1 {
            parts.push((e + 1).to_string());
        }
    }
    parts.join(",")
}

fn parse_set_line(line: &str, n: usize) -> Result<u32, FamilyError> {
    if line == "-" {
        return Ok(0);
    }
    let mut mask = 0u32;
    let mut prev = 0usize;
    for tok in line.split(',') {
        let e: usize = tok
            .trim()
            .parse()
            .map_err(|_| FamilyError::BadText(format!("bad element '{tok}'")))?;
        if e == 0 || e > n {
            return Err(FamilyError::BadText(format!("element {e} outside 1..={n}")));
        }
        if e <= prev {
            return Err(FamilyError::BadText(format!(
                "elements must be strictly increasing in '{line}'"
            )));
        }
        prev = e;
        mask |= 1 << (e - 1);
    }
    Ok(mask)
}
