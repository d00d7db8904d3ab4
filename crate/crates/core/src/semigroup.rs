//! Numerical semigroups: membership, Apéry sets, orders, and enumeration.
//!
//! A numerical semigroup is determined here by its minimal generators
//! `g_0 < g_1 < … < g_ν` with `gcd = 1`.  The *multiplicity* is `m = g_0`,
//! the *width* is `w = g_ν − g_0`, and the *Frobenius number* is the largest
//! integer outside the semigroup (`−1` for the full set of naturals).
//! Membership is tabulated once, up to `conductor + g_ν`, so that every
//! order recursion and Apéry scan stays inside the table.

use std::collections::BTreeMap;

use thiserror::Error;

/// Errors arising while constructing or transforming a numerical semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    /// The generator list was empty or contained a zero.
    #[error("generators must be a non-empty list of positive integers")]
    EmptyInput,
    /// The generators have a common divisor `> 1`, so the complement is
    /// infinite and the monoid is not a numerical semigroup.
    #[error("generators have gcd {0} > 1, so the complement is infinite")]
    NonCofinite(u64),
    /// The operation needs at least two distinct generators (width `≥ 1`).
    #[error("operation is undefined for the full semigroup of naturals (width 0)")]
    ZeroWidth,
}

/// A numerical semigroup with precomputed membership table.
///
/// Equality and ordering are by minimal generating set, which determines
/// the semigroup uniquely.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    conductor: u64,
    /// `membership[n]` for `0 ≤ n ≤ conductor + max generator`.
    membership: Vec<bool>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.generators.cmp(&other.generators)
    }
}

impl std::fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reducing to the minimal
    /// generating set.
    ///
    /// Returns [`SemigroupError::EmptyInput`] for an empty list or a zero
    /// entry, and [`SemigroupError::NonCofinite`] when the gcd of the
    /// generators exceeds 1.
    pub fn from_generators(raw: &[u64]) -> Result<Self, SemigroupError> {
        if raw.is_empty() || raw.contains(&0) {
            return Err(SemigroupError::EmptyInput);
        }
        let mut gens: Vec<u64> = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0u64, |a, &b| num_integer::gcd(a, b));
        if g != 1 {
            return Err(SemigroupError::NonCofinite(g));
        }
        if gens[0] == 1 {
            // The full semigroup of naturals.
            return Ok(NumericalSemigroup {
                generators: vec![1],
                frobenius: -1,
                conductor: 0,
                membership: vec![true, true],
            });
        }

        let m = gens[0] as usize;
        let max_gen = *gens.last().unwrap() as usize;

        // Membership by dynamic programming.  The conductor is found as the
        // start of the first run of `m` consecutive members: once such a run
        // exists, adding multiples of `m` reaches every larger integer.  The
        // table is grown geometrically until the run appears.
        let mut cap = 4 * max_gen + 4;
        let (conductor, mut membership) = loop {
            let mut table = vec![false; cap + 1];
            table[0] = true;
            let mut run = 0usize;
            let mut found = None;
            for n in 1..=cap {
                let member = gens
                    .iter()
                    .any(|&g| n >= g as usize && table[n - g as usize]);
                table[n] = member;
                run = if member { run + 1 } else { 0 };
                if run >= m {
                    found = Some(n + 1 - m);
                    break;
                }
            }
            match found {
                Some(c) => break (c, table),
                None => cap *= 2,
            }
        };

        // Extend the table to the working horizon `conductor + max_gen`.
        // Entries are valid through the end of the conductor run; everything
        // past it is recomputed (the search loop above stops early).
        let horizon = conductor + max_gen;
        let filled = conductor + m - 1;
        membership.resize(horizon + 1, false);
        for n in filled + 1..=horizon {
            membership[n] = gens
                .iter()
                .any(|&g| n >= g as usize && membership[n - g as usize]);
        }

        // A member is a minimal generator exactly when it is not a sum of
        // two nonzero members; minimal generators appear in every generating
        // set, so filtering the input suffices.
        let minimal: Vec<u64> = gens
            .iter()
            .copied()
            .filter(|&g| {
                let g = g as usize;
                !(m..=g.saturating_sub(m)).any(|a| membership[a] && membership[g - a])
            })
            .collect();

        Ok(NumericalSemigroup {
            generators: minimal,
            frobenius: conductor as i64 - 1,
            conductor: conductor as u64,
            membership,
        })
    }

    /// Minimal generators `g_0 < g_1 < … < g_ν`.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The multiplicity `m = g_0` (smallest nonzero element).
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// The width `w = g_ν − g_0`.
    pub fn width(&self) -> u64 {
        self.generators[self.generators.len() - 1] - self.generators[0]
    }

    /// Number of minimal generators other than the multiplicity (`ν`).
    pub fn nu(&self) -> usize {
        self.generators.len() - 1
    }

    /// Number of minimal generators (`ν + 1`), the embedding dimension.
    pub fn embedding_dim(&self) -> usize {
        self.generators.len()
    }

    /// The largest integer not in the semigroup (`−1` for the naturals).
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// The conductor `frobenius + 1`: every `n ≥ conductor` is a member.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Membership test; negative integers are never members.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        if n >= self.conductor {
            return true;
        }
        self.membership[n as usize]
    }

    /// Whether `n` lies in the Apéry set `{γ ∈ Γ : γ − m ∉ Γ}`.
    pub fn in_apery(&self, n: i64) -> bool {
        self.contains(n) && !self.contains(n - self.multiplicity() as i64)
    }

    /// Computes the Apéry set with respect to the multiplicity, together
    /// with the order of each Apéry element.
    ///
    /// The order of a member is the largest number of generators in any
    /// representation as a sum of minimal generators; on Apéry elements no
    /// representation can use the multiplicity, so the value agrees with
    /// the order taken over `g_1, …, g_ν` alone.
    pub fn apery_set(&self) -> AperyData {
        let m = self.multiplicity();
        let horizon = self.membership.len() - 1;

        // Order of every member up to the horizon, by dynamic programming
        // over all minimal generators.
        let mut ord = vec![0u32; horizon + 1];
        for n in 1..=horizon {
            if !self.membership[n] {
                continue;
            }
            let mut best = 0u32;
            for &g in &self.generators {
                let g = g as usize;
                if n >= g && self.membership[n - g] {
                    best = best.max(ord[n - g] + 1);
                }
            }
            debug_assert!(best > 0, "nonzero member must have a predecessor");
            ord[n] = best;
        }

        let mut elements = Vec::with_capacity(m as usize);
        let mut orders = Vec::with_capacity(m as usize);
        for j in 0..m {
            let mut n = j as usize;
            while !self.membership[n] {
                n += m as usize;
                debug_assert!(n <= horizon, "Apéry scan left the membership table");
            }
            elements.push(n as u64);
            orders.push(ord[n]);
        }
        AperyData {
            multiplicity: m,
            elements,
            orders,
        }
    }

    /// Hilbert–Samuel function of the associated graded ring of the artinian
    /// reduction: the number of Apéry elements of order at most `d`.
    pub fn hilbert_samuel_gr(&self, d: u32) -> u64 {
        self.apery_set().hilbert_samuel(d)
    }

    /// The interval completion `⟨m, m+1, …, m+w⟩` with the same
    /// multiplicity and width.
    ///
    /// Fails with [`SemigroupError::ZeroWidth`] on the full semigroup of
    /// naturals.  The listed generators are automatically minimal whenever
    /// `w ≤ m − 1`; for the regime `w ≤ m − 2` see
    /// [`NumericalSemigroup::interval_regime`].
    pub fn interval_completion(&self) -> Result<NumericalSemigroup, SemigroupError> {
        let w = self.width();
        if w == 0 {
            return Err(SemigroupError::ZeroWidth);
        }
        let m = self.multiplicity();
        let gens: Vec<u64> = (m..=m + w).collect();
        NumericalSemigroup::from_generators(&gens)
    }

    /// Whether the width satisfies `w ≤ m − 2`, the hypothesis under which
    /// the interval completion controls the order filtration.
    pub fn interval_regime(&self) -> bool {
        self.width() + 2 <= self.multiplicity()
    }

    /// The shifted semigroup `⟨g_0 + j, …, g_ν + j⟩`, re-minimalized.
    ///
    /// Fails with [`SemigroupError::NonCofinite`] when the shifted
    /// generators acquire a common divisor.
    pub fn shift(&self, j: u64) -> Result<NumericalSemigroup, SemigroupError> {
        let gens: Vec<u64> = self.generators.iter().map(|&g| g + j).collect();
        NumericalSemigroup::from_generators(&gens)
    }
}

/// The Apéry set of a semigroup with respect to its multiplicity, with the
/// order of each element.
///
/// `elements()[j]` is the smallest member congruent to `j` mod `m`; there
/// are exactly `m` elements, one per residue class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyData {
    multiplicity: u64,
    elements: Vec<u64>,
    orders: Vec<u32>,
}

impl AperyData {
    /// The multiplicity `m` the set was computed against.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Apéry elements indexed by residue class mod `m`.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Orders of the Apéry elements, parallel to [`AperyData::elements`].
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// The largest order attained on the Apéry set.
    pub fn max_order(&self) -> u32 {
        self.orders.iter().copied().max().unwrap_or(0)
    }

    /// Order lookup for an Apéry element; `None` when `γ` is not in the set.
    pub fn order_of(&self, gamma: u64) -> Option<u32> {
        let j = (gamma % self.multiplicity) as usize;
        (self.elements[j] == gamma).then(|| self.orders[j])
    }

    /// Number of Apéry elements of order at most `d` — the Hilbert–Samuel
    /// function of the associated graded ring of the artinian reduction.
    pub fn hilbert_samuel(&self, d: u32) -> u64 {
        self.orders.iter().filter(|&&o| o <= d).count() as u64
    }
}

/// Enumerates, for each multiplicity `m` in `m_min..=m_max`, every numerical
/// semigroup whose minimal generators lie in `{m} ∪ {m+1, …, m+w}` with
/// largest minimal generator exactly `m + w`.
///
/// Candidate generating sets with gcd `> 1` are skipped, candidates whose
/// largest generator becomes redundant are filtered out (their width is
/// smaller), and duplicates arising from different candidate sets with the
/// same minimal generating set are merged.  Iteration order is `m`
/// ascending, then lexicographic on the minimal generating set.  For
/// `width == 0` the stream is empty.
pub fn enumerate_by_width(
    width: u64,
    m_min: u64,
    m_max: u64,
) -> impl Iterator<Item = NumericalSemigroup> {
    let lo = m_min.max(2);
    (lo..=m_max.max(1)).flat_map(move |m| semigroups_of_width(width, m))
}

fn semigroups_of_width(width: u64, m: u64) -> Vec<NumericalSemigroup> {
    if width == 0 {
        return Vec::new();
    }
    let interior: Vec<u64> = (m + 1..m + width).collect();
    assert!(
        interior.len() < 63,
        "width {width} is too large for subset enumeration"
    );
    let mut seen: BTreeMap<Vec<u64>, NumericalSemigroup> = BTreeMap::new();
    for mask in 0u64..(1 << interior.len()) {
        let mut cand = Vec::with_capacity(interior.len() + 2);
        cand.push(m);
        for (k, &g) in interior.iter().enumerate() {
            if mask >> k & 1 == 1 {
                cand.push(g);
            }
        }
        cand.push(m + width);
        let s = match NumericalSemigroup::from_generators(&cand) {
            Ok(s) => s,
            Err(_) => continue, // gcd > 1
        };
        if s.width() != width {
            continue; // the top generator was redundant
        }
        seen.entry(s.generators().to_vec()).or_insert(s);
    }
    seen.into_values().collect()
}
