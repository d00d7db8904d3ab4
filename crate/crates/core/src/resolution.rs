//! Betti numbers of graded modules with monomial structure.
//!
//! Three routes are implemented and cross-checked in the tests:
//!
//! * Koszul homology of a [`MonomialModule`], computed strand by strand so
//!   every rank computation stays small and the graded Betti numbers come
//!   out for free;
//! * reduced homology of squarefree divisor complexes of a numerical
//!   semigroup, which resolves the semigroup ring over the full polynomial
//!   ring (one variable per generator);
//! * the Eliahou–Kervaire formula in [`crate::monomial`] for stable ideals.
//!
//! The module also constructs the initial ideal of the tangent cone of a
//! semigroup ring by a degreewise kernel scan, with a closed form for the
//! interval-generated case.

use crate::linalg::{FieldConfig, IncrementalSpan, LinalgError, SparseMatrix};
use crate::monomial::{cmp_degrevlex, monomials_of_degree, Monomial, MonomialError, MonomialIdeal};
use crate::semigroup::NumericalSemigroup;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use thiserror::Error;

/// Masks index subsets of variables, so the variable count is capped.
const MAX_KOSZUL_VARS: usize = 24;

#[derive(Debug, Error)]
pub enum ResolutionError {
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("actions of x_{var_a} and x_{var_b} do not commute on basis element {basis}")]
    NonCommutingActions {
        var_a: usize,
        var_b: usize,
        basis: usize,
    },
    #[error("quotient has infinite length; a finite monomial basis is required")]
    InfiniteColength,
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// One graded Betti number: `dim` copies of the field in homological
/// `index` and internal `degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GradedBetti {
    pub index: u32,
    pub degree: u64,
    pub dim: u64,
}

/// Betti numbers of a module, total and (optionally) graded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    /// `total[i]` is `b_i`; trailing zeros are trimmed.
    pub total: Vec<u64>,
    /// Graded refinement, sorted by homological index then degree.
    pub graded: Option<Vec<GradedBetti>>,
    /// Coefficient field the ranks were computed over.
    pub field: FieldConfig,
}

impl BettiTable {
    pub fn betti(&self, i: usize) -> u64 {
        self.total.get(i).copied().unwrap_or(0)
    }

    /// Index of the last nonzero Betti number.
    pub fn projective_dimension(&self) -> usize {
        self.total.len() - 1
    }
}

/// A finite-dimensional graded module on which each variable acts by
/// sending basis elements to basis elements (or to zero).
///
/// This covers artinian reductions of semigroup rings and monomial
/// quotients, and is exactly the structure the Koszul differential needs.
#[derive(Debug, Clone)]
pub struct MonomialModule {
    degrees: Vec<u64>,
    var_degrees: Vec<u64>,
    /// `actions[j][b]` is the basis index of `x_j · b`, or `None` for zero.
    actions: Vec<Vec<Option<usize>>>,
}

impl MonomialModule {
    pub fn new(
        degrees: Vec<u64>,
        var_degrees: Vec<u64>,
        actions: Vec<Vec<Option<usize>>>,
    ) -> Result<Self, ResolutionError> {
        if actions.len() != var_degrees.len() {
            return Err(ResolutionError::InvalidModule(format!(
                "{} action tables for {} variables",
                actions.len(),
                var_degrees.len()
            )));
        }
        for (j, table) in actions.iter().enumerate() {
            if table.len() != degrees.len() {
                return Err(ResolutionError::InvalidModule(format!(
                    "action table of x_{} has length {}, expected {}",
                    j + 1,
                    table.len(),
                    degrees.len()
                )));
            }
            for (b, &target) in table.iter().enumerate() {
                if let Some(t) = target {
                    if t >= degrees.len() {
                        return Err(ResolutionError::InvalidModule(format!(
                            "action of x_{} on basis element {b} targets {t}, out of range",
                            j + 1
                        )));
                    }
                    if degrees[t] != degrees[b] + var_degrees[j] {
                        return Err(ResolutionError::InvalidModule(format!(
                            "action of x_{} on basis element {b} does not respect the grading",
                            j + 1
                        )));
                    }
                }
            }
        }
        let module = MonomialModule {
            degrees,
            var_degrees,
            actions,
        };
        for a in 0..module.actions.len() {
            for b in a + 1..module.actions.len() {
                for basis in 0..module.dim() {
                    let ab = module.apply(a, basis).and_then(|t| module.apply(b, t));
                    let ba = module.apply(b, basis).and_then(|t| module.apply(a, t));
                    if ab != ba {
                        return Err(ResolutionError::NonCommutingActions {
                            var_a: a + 1,
                            var_b: b + 1,
                            basis,
                        });
                    }
                }
            }
        }
        Ok(module)
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn num_vars(&self) -> usize {
        self.var_degrees.len()
    }

    fn apply(&self, var: usize, basis: usize) -> Option<usize> {
        self.actions[var][basis]
    }
}

/// Rank of the Koszul differential between two layers of one strand.
fn differential_rank(
    module: &MonomialModule,
    source: &[(usize, u32)],
    target: &[(usize, u32)],
    field: FieldConfig,
) -> Result<usize, ResolutionError> {
    if source.is_empty() || target.is_empty() {
        return Ok(0);
    }
    let index: HashMap<(usize, u32), u32> = target
        .iter()
        .enumerate()
        .map(|(r, &key)| (key, r as u32))
        .collect();
    let mut triplets = Vec::new();
    for (c, &(b, mask)) in source.iter().enumerate() {
        for j in 0..module.num_vars() {
            if mask >> j & 1 == 0 {
                continue;
            }
            let Some(tb) = module.apply(j, b) else {
                continue;
            };
            let below = (mask & ((1u32 << j) - 1)).count_ones();
            let sign = if below % 2 == 0 { 1i64 } else { -1 };
            let row = *index
                .get(&(tb, mask ^ (1 << j)))
                .expect("differential image left its strand");
            triplets.push((row, c as u32, sign));
        }
    }
    let matrix = SparseMatrix::from_triplets(target.len(), source.len(), &triplets)?;
    Ok(matrix.rank(field))
}

/// Total and graded Betti numbers of a module over the polynomial ring,
/// from the homology of its Koszul complex.
///
/// The complex splits by internal degree, so each rank computation only
/// sees the basis elements of one strand.
pub fn koszul_betti(
    module: &MonomialModule,
    field: FieldConfig,
) -> Result<BettiTable, ResolutionError> {
    let nu = module.num_vars();
    if nu > MAX_KOSZUL_VARS {
        return Err(ResolutionError::InvalidModule(format!(
            "{nu} variables exceed the supported maximum of {MAX_KOSZUL_VARS}"
        )));
    }
    let mut strands: BTreeMap<u64, Vec<Vec<(usize, u32)>>> = BTreeMap::new();
    for mask in 0u32..(1u32 << nu) {
        let card = mask.count_ones() as usize;
        let mask_deg: u64 = (0..nu)
            .filter(|&j| mask >> j & 1 == 1)
            .map(|j| module.var_degrees[j])
            .sum();
        for b in 0..module.dim() {
            let degree = module.degrees[b] + mask_deg;
            strands
                .entry(degree)
                .or_insert_with(|| vec![Vec::new(); nu + 1])[card]
                .push((b, mask));
        }
    }
    let mut total = vec![0u64; nu + 1];
    let mut graded: Vec<GradedBetti> = Vec::new();
    for (&degree, layers) in &strands {
        let mut ranks = vec![0usize; nu + 2];
        for i in 1..=nu {
            ranks[i] = differential_rank(module, &layers[i], &layers[i - 1], field)?;
        }
        let mut euler_dim = 0i64;
        let mut euler_betti = 0i64;
        for (i, layer) in layers.iter().enumerate() {
            let b = layer.len() as i64 - ranks[i] as i64 - ranks[i + 1] as i64;
            assert!(b >= 0, "negative homology dimension in strand {degree}");
            let sign = if i % 2 == 0 { 1 } else { -1 };
            euler_dim += sign * layer.len() as i64;
            euler_betti += sign * b;
            if b > 0 {
                total[i] += b as u64;
                graded.push(GradedBetti {
                    index: i as u32,
                    degree,
                    dim: b as u64,
                });
            }
        }
        assert_eq!(
            euler_dim, euler_betti,
            "Euler characteristic mismatch in strand {degree}"
        );
    }
    while total.len() > 1 && *total.last().unwrap() == 0 {
        total.pop();
    }
    graded.sort_by_key(|g| (g.index, g.degree));
    Ok(BettiTable {
        total,
        graded: Some(graded),
        field,
    })
}

/// Betti numbers of the semigroup ring `k[Γ]` over the polynomial ring with
/// one variable per minimal generator.
///
/// The parameter `t^m` (the multiplicity generator) is a nonzerodivisor on
/// the ring, so the resolution is computed from the artinian reduction: the
/// module with basis the Apéry set, where the remaining generators act by
/// addition when the sum stays in the Apéry set and by zero otherwise.
/// Degrees in the result are semigroup values.
pub fn betti_semigroup(
    s: &NumericalSemigroup,
    field: FieldConfig,
) -> Result<BettiTable, ResolutionError> {
    let ap = s.apery_set();
    let m = s.multiplicity();
    let degrees: Vec<u64> = ap.elements().to_vec();
    let var_degrees: Vec<u64> = s.generators()[1..].to_vec();
    let actions: Vec<Vec<Option<usize>>> = var_degrees
        .iter()
        .map(|&g| {
            degrees
                .iter()
                .map(|&gamma| {
                    let target = gamma + g;
                    let j = (target % m) as usize;
                    (ap.elements()[j] == target).then_some(j)
                })
                .collect()
        })
        .collect();
    let module = MonomialModule::new(degrees, var_degrees, actions)?;
    koszul_betti(&module, field)
}

/// Rank of a simplicial boundary map between consecutive cardinalities.
fn boundary_rank(
    source: &[u32],
    target: &[u32],
    field: FieldConfig,
) -> Result<usize, ResolutionError> {
    if source.is_empty() || target.is_empty() {
        return Ok(0);
    }
    let index: HashMap<u32, u32> = target
        .iter()
        .enumerate()
        .map(|(r, &f)| (f, r as u32))
        .collect();
    let mut triplets = Vec::new();
    for (c, &face) in source.iter().enumerate() {
        let mut sign = 1i64;
        for j in 0..32 {
            if face >> j & 1 == 0 {
                continue;
            }
            let row = *index
                .get(&(face ^ (1 << j)))
                .expect("complex not closed under taking subsets");
            triplets.push((row, c as u32, sign));
            sign = -sign;
        }
    }
    let matrix = SparseMatrix::from_triplets(target.len(), source.len(), &triplets)?;
    Ok(matrix.rank(field))
}

/// Betti numbers of the semigroup ring from squarefree divisor complexes.
///
/// For each degree `δ`, the complex has one vertex per generator (including
/// the multiplicity) and a face for every subset whose sum can be removed
/// from `δ` inside the semigroup; `b_{i,δ}` is the reduced homology of that
/// complex in dimension `i − 1`.  Only degrees of the form
/// `Apéry element + sum of non-multiplicity generators` can carry homology,
/// so those are the candidates scanned.
pub fn divisor_complex_betti(
    s: &NumericalSemigroup,
    field: FieldConfig,
) -> Result<BettiTable, ResolutionError> {
    let gens = s.generators();
    let nv = gens.len();
    if nv > MAX_KOSZUL_VARS {
        return Err(ResolutionError::BadParameters(format!(
            "{nv} generators exceed the supported maximum of {MAX_KOSZUL_VARS}"
        )));
    }
    let ap = s.apery_set();
    let nu = nv - 1;
    let mut candidates: BTreeSet<u64> = BTreeSet::new();
    for mask in 0u32..(1u32 << nu) {
        let mask_deg: u64 = (0..nu)
            .filter(|&j| mask >> j & 1 == 1)
            .map(|j| gens[j + 1])
            .sum();
        for &gamma in ap.elements() {
            candidates.insert(gamma + mask_deg);
        }
    }
    let mut total = vec![0u64; nv + 1];
    let mut graded: Vec<GradedBetti> = Vec::new();
    for &delta in &candidates {
        let mut layers: Vec<Vec<u32>> = vec![Vec::new(); nv + 1];
        for mask in 0u32..(1u32 << nv) {
            let sum: u64 = (0..nv)
                .filter(|&j| mask >> j & 1 == 1)
                .map(|j| gens[j])
                .sum();
            if sum <= delta && s.contains((delta - sum) as i64) {
                layers[mask.count_ones() as usize].push(mask);
            }
        }
        let mut ranks = vec![0usize; nv + 2];
        for c in 1..=nv {
            ranks[c] = boundary_rank(&layers[c], &layers[c - 1], field)?;
        }
        for (i, layer) in layers.iter().enumerate() {
            let b = layer.len() as i64 - ranks[i] as i64 - ranks[i + 1] as i64;
            assert!(b >= 0, "negative homology dimension in degree {delta}");
            if b > 0 {
                total[i] += b as u64;
                graded.push(GradedBetti {
                    index: i as u32,
                    degree: delta,
                    dim: b as u64,
                });
            }
        }
    }
    while total.len() > 1 && *total.last().unwrap() == 0 {
        total.pop();
    }
    graded.sort_by_key(|g| (g.index, g.degree));
    Ok(BettiTable {
        total,
        graded: Some(graded),
        field,
    })
}

/// Initial ideal of the tangent cone of the semigroup ring, as a monomial
/// ideal in one variable per non-multiplicity generator.
///
/// Degree by degree, monomials are scanned in increasing degree-reverse-lex
/// order; the image of a monomial in the associated graded ring of the
/// artinian reduction is a basis vector when the represented value is an
/// Apéry element of the right order and zero otherwise.  A monomial lies in
/// the initial ideal exactly when its image is spanned by the images of the
/// strictly smaller monomials.  The quotient always has colength equal to
/// the multiplicity.
pub fn tangent_cone_initial_ideal(
    s: &NumericalSemigroup,
) -> Result<MonomialIdeal, ResolutionError> {
    let nu = s.nu();
    if nu == 0 {
        return Ok(MonomialIdeal::new(0, vec![])?);
    }
    let gens = &s.generators()[1..];
    let ap = s.apery_set();
    let m = s.multiplicity();
    let top = ap.max_order() + 1;
    let mut previous_layer: HashSet<Vec<u32>> = HashSet::new();
    let mut min_gens: Vec<Monomial> = Vec::new();
    for d in 0..=top {
        let mut layer = monomials_of_degree(nu, d);
        layer.sort_by(cmp_degrevlex);
        let mut span = IncrementalSpan::new(FieldConfig::Rationals, m as usize);
        let mut current_layer: HashSet<Vec<u32>> = HashSet::new();
        for mono in &layer {
            let gamma: u64 = mono
                .exps()
                .iter()
                .zip(gens)
                .map(|(&e, &g)| e as u64 * g)
                .sum();
            let mut image = vec![0i64; m as usize];
            if ap.order_of(gamma) == Some(d) {
                image[(gamma % m) as usize] = 1;
            }
            let independent = span
                .add_vector(&image)
                .expect("image dimension is fixed by the Apéry set");
            if independent {
                continue;
            }
            current_layer.insert(mono.exps().to_vec());
            let has_divisor_inside = (0..nu).any(|i| {
                mono.exps()[i] > 0 && {
                    let mut e = mono.exps().to_vec();
                    e[i] -= 1;
                    previous_layer.contains(&e)
                }
            });
            if !has_divisor_inside {
                min_gens.push(mono.clone());
            }
        }
        previous_layer = current_layer;
    }
    Ok(MonomialIdeal::new(nu, min_gens)?)
}

/// Closed form of the tangent-cone initial ideal for the interval-generated
/// semigroup `⟨m, m+1, …, m+w⟩`: with `m = qw + r`, `1 ≤ r ≤ w`, the ideal
/// is generated by all products of two of the first `w − 1` variables
/// together with `y_w^q · y_i` for `r ≤ i ≤ w`.
pub fn interval_initial_ideal(
    multiplicity: u64,
    width: u64,
) -> Result<MonomialIdeal, ResolutionError> {
    let (m, w) = (multiplicity, width);
    if w == 0 || w >= m {
        return Err(ResolutionError::BadParameters(format!(
            "width must satisfy 1 ≤ w ≤ m − 1, got w = {w} and m = {m}"
        )));
    }
    let q = (m - 1) / w;
    let r = m - q * w;
    let q32 = u32::try_from(q).map_err(|_| {
        ResolutionError::BadParameters("multiplicity too large for exponent range".into())
    })?;
    let wu = w as usize;
    let mut gens = Vec::new();
    for i in 0..wu.saturating_sub(1) {
        for j in i..wu - 1 {
            let mut e = vec![0u32; wu];
            e[i] += 1;
            e[j] += 1;
            gens.push(Monomial::new(e));
        }
    }
    for i in r as usize..=wu {
        let mut e = vec![0u32; wu];
        e[wu - 1] = q32;
        e[i - 1] += 1;
        gens.push(Monomial::new(e));
    }
    Ok(MonomialIdeal::new(wu, gens)?)
}

/// Betti numbers of the quotient by an artinian monomial ideal, from the
/// Koszul complex on its standard-monomial basis.
pub fn betti_monomial_quotient(
    ideal: &MonomialIdeal,
    field: FieldConfig,
) -> Result<BettiTable, ResolutionError> {
    let n = ideal.n_vars();
    if ideal.colength().is_none() {
        return Err(ResolutionError::InfiniteColength);
    }
    let mut basis: Vec<Monomial> = Vec::new();
    let mut d = 0u32;
    loop {
        let layer: Vec<Monomial> = monomials_of_degree(n, d)
            .into_iter()
            .filter(|m| !ideal.contains(m))
            .collect();
        if layer.is_empty() {
            break;
        }
        basis.extend(layer);
        d += 1;
    }
    let index: HashMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let degrees: Vec<u64> = basis.iter().map(|m| m.degree()).collect();
    let var_degrees = vec![1u64; n];
    let actions: Vec<Vec<Option<usize>>> = (0..n)
        .map(|j| {
            basis
                .iter()
                .map(|mono| {
                    let mut e = mono.exps().to_vec();
                    e[j] += 1;
                    index.get(&Monomial::new(e)).copied()
                })
                .collect()
        })
        .collect();
    let module = MonomialModule::new(degrees, var_degrees, actions)?;
    koszul_betti(&module, field)
}
