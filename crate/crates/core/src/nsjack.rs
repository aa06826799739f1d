//! Dunkl operators, the Bruhat order on weak compositions, and the
//! construction of the non-symmetric Jack polynomials E_η over ℚ(α).
//!
//! E_η is monic on z^η, triangular in the Bruhat order, and the unique
//! simultaneous eigenfunction of the Dunkl operators
//!
//!   𝒟_i = α z_i ∂_i + Σ_{j<i} z_i/z_{ij}(1−K_ij)
//!                   + Σ_{j>i} z_j/z_{ij}(1−K_ij) − (i−1)
//!
//! with eigenvalues η̂_i = αη_i − (#{j<i : η_j ≥ η_i} + #{j>i : η_j > η_i}).
//! The construction restricts all 𝒟_i to the span of monomials z^ν with
//! ν ≺ η and solves the joint eigenvector by back-substitution along a
//! linear extension of the Bruhat order. The divided differences are
//! evaluated per monomial through the closed geometric-sum form, which
//! always divides evenly.

use crate::exact::{AlphaPoly, AlphaRat};
use crate::ring::{Composition, RingError, SPoly, SuperMono};
use crate::spart::dominance_partitions;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NsJackError {
    #[error("compositions have different weights")]
    WeightMismatch,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("eigenvalue vectors fail to separate {0:?} from {1:?}")]
    DegenerateSpectrum(Composition, Composition),
}

/// The Dunkl eigenvalue η̂_i (1-based i) as a degree-≤1 polynomial in α.
pub fn dunkl_eigenvalue(eta: &[u32], i: usize) -> AlphaPoly {
    assert!(i >= 1 && i <= eta.len());
    let e = eta[i - 1];
    let before = eta[..i - 1].iter().filter(|&&x| x >= e).count();
    let after = eta[i..].iter().filter(|&&x| x > e).count();
    AlphaPoly::linear(e as i64, -((before + after) as i64))
}

/// All N eigenvalues of a composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DunklSpectrum {
    pub eta: Composition,
    pub values: Vec<AlphaPoly>,
}

impl DunklSpectrum {
    pub fn of(eta: &[u32]) -> Self {
        DunklSpectrum {
            eta: eta.to_vec(),
            values: (1..=eta.len()).map(|i| dunkl_eigenvalue(eta, i)).collect(),
        }
    }
}

/// 𝒟_i z^e expanded as monomial/coefficient pairs (1-based i).
pub fn dunkl_monomial(i: usize, e: &[u32]) -> Vec<(Composition, AlphaRat)> {
    let n = e.len();
    let idx = i - 1;
    let mut out: BTreeMap<Composition, AlphaRat> = BTreeMap::new();
    let mut add = |comp: Composition, c: AlphaRat| {
        let entry = out.entry(comp).or_insert_with(AlphaRat::zero);
        *entry = &*entry + &c;
    };
    // α z_i ∂_i − (i−1)
    let diag = AlphaPoly::linear(e[idx] as i64, -(idx as i64));
    add(e.to_vec(), AlphaRat::from_poly(diag));
    // divided differences: z_i/z_ij (1−K_ij) for j<i, z_j/z_ij (1−K_ij) for j>i
    for j in 0..n {
        if j == idx {
            continue;
        }
        let a = e[idx];
        let b = e[j];
        if a == b {
            continue;
        }
        let (hi, lo) = (a.max(b), a.min(b));
        let sign = if a > b { 1 } else { -1 };
        // (z_i^a z_j^b − z_i^b z_j^a)/(z_i−z_j) = ± Σ_t z_i^{hi−1−t} z_j^{lo+t}
        for t in 0..(hi - lo) {
            let mut comp = e.to_vec();
            comp[idx] = hi - 1 - t;
            comp[j] = lo + t;
            // multiply by z_i when j < i, by z_j when j > i
            if j < idx {
                comp[idx] += 1;
            } else {
                comp[j] += 1;
            }
            add(comp, AlphaRat::from_int(sign));
        }
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Applies the Dunkl operator 𝒟_i (1-based) to a Grassmann-free
/// polynomial.
pub fn dunkl_apply(i: usize, f: &SPoly) -> Result<SPoly, NsJackError> {
    f.expect_z_only()?;
    let n = f.arity();
    assert!(i >= 1 && i <= n, "operator index out of range");
    let mut out = SPoly::zero(n);
    for (m, c) in f.terms() {
        for (comp, w) in dunkl_monomial(i, &m.z) {
            out.add_term(
                SuperMono {
                    g: m.g,
                    z: comp,
                },
                &w * c,
            );
        }
    }
    Ok(out)
}

/// The sorted (weakly decreasing) rearrangement η⁺.
pub fn sorted_desc(eta: &[u32]) -> Vec<u32> {
    let mut s = eta.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// The minimal-length permutation w (one-line, 0-based) with η = w·η⁺,
/// i.e. η_{w[k]} = η⁺_k. Stable sorting gives minimality.
pub fn min_length_perm(eta: &[u32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..eta.len()).collect();
    idx.sort_by(|&a, &b| eta[b].cmp(&eta[a]).then(a.cmp(&b)));
    idx
}

fn inversions(perm: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// Strong Bruhat order on S_N via the rank-matrix criterion:
/// u ≤ w iff #{k ≤ i : u(k) ≥ j} ≤ #{k ≤ i : w(k) ≥ j} for all i, j.
pub fn bruhat_leq_perm(u: &[usize], w: &[usize]) -> bool {
    let n = u.len();
    for i in 0..n {
        for j in 0..n {
            let cu = u[..=i].iter().filter(|&&v| v >= j).count();
            let cw = w[..=i].iter().filter(|&&v| v >= j).count();
            if cu > cw {
                return false;
            }
        }
    }
    true
}

/// ν ≺ η in the Bruhat order on weak compositions: ν⁺ < η⁺ in dominance,
/// or ν⁺ = η⁺ and w_ν > w_η in the Bruhat order on S_N.
pub fn bruhat_less(nu: &[u32], eta: &[u32]) -> Result<bool, NsJackError> {
    let wn: u64 = nu.iter().map(|&x| x as u64).sum();
    let we: u64 = eta.iter().map(|&x| x as u64).sum();
    if wn != we {
        return Err(NsJackError::WeightMismatch);
    }
    let np = sorted_desc(nu);
    let ep = sorted_desc(eta);
    if np == ep {
        let wu = min_length_perm(eta);
        let wv = min_length_perm(nu);
        Ok(wu != wv && bruhat_leq_perm(&wu, &wv))
    } else {
        Ok(dominance_partitions(&np, &ep) == Some(Ordering::Less))
    }
}

/// Distinct rearrangements of a partition padded to length n.
fn rearrangements(mu: &[u32], n: usize) -> Vec<Composition> {
    let mut padded = mu.to_vec();
    padded.resize(n, 0);
    padded.sort_unstable();
    // lexicographic next-permutation sweep over the multiset
    let mut out = Vec::new();
    loop {
        out.push(padded.clone());
        // find the next permutation
        let mut i = n.wrapping_sub(1);
        while i > 0 && padded[i - 1] >= padded[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while padded[j] <= padded[i - 1] {
            j -= 1;
        }
        padded.swap(i - 1, j);
        padded[i..].reverse();
    }
    out
}

/// The compositions ν ⪯ η (η itself plus all Bruhat-smaller ones), in a
/// linear extension of ≻ (greater first, η first).
fn bruhat_lower_span(eta: &[u32]) -> Vec<Composition> {
    let n = eta.len();
    let weight: u32 = eta.iter().sum();
    let mut ep = sorted_desc(eta);
    while ep.last() == Some(&0) {
        ep.pop();
    }
    let mut span: Vec<Composition> = Vec::new();
    for mu in crate::spart::partitions_with_max_len(weight, n) {
        let cmp = dominance_partitions(&mu, &ep);
        if !(mu == ep || cmp == Some(Ordering::Less)) {
            continue;
        }
        for nu in rearrangements(&mu, n) {
            if nu.as_slice() == eta || bruhat_less(&nu, eta).unwrap() {
                span.push(nu);
            }
        }
    }
    span.sort_by(|a, b| {
        let pa = sorted_desc(a);
        let pb = sorted_desc(b);
        pb.cmp(&pa)
            .then_with(|| inversions(&min_length_perm(a)).cmp(&inversions(&min_length_perm(b))))
            .then_with(|| b.cmp(a))
    });
    span
}

type ECacheMap = HashMap<(usize, Vec<u32>), Arc<SPoly>>;

fn e_cache() -> &'static Mutex<ECacheMap> {
    static CACHE: OnceLock<Mutex<ECacheMap>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The non-symmetric Jack polynomial E_η in `eta.len()` variables.
///
/// Memoized: the symmetrizations upstream re-read the same E for every
/// sector member. The cache behaves as insert-if-absent.
pub fn nonsym_jack(eta: &[u32]) -> Arc<SPoly> {
    let key = (eta.len(), eta.to_vec());
    if let Some(hit) = e_cache().lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let computed = Arc::new(build_nonsym_jack(eta));
    let mut map = e_cache().lock().unwrap();
    Arc::clone(map.entry(key).or_insert(computed))
}

/// Drops every memoized E_η (for cache bookkeeping in the CLI).
pub fn clear_e_cache() {
    e_cache().lock().unwrap().clear();
}

fn build_nonsym_jack(eta: &[u32]) -> SPoly {
    let n = eta.len();
    let span = bruhat_lower_span(eta);
    debug_assert_eq!(span[0].as_slice(), eta);
    let index: BTreeMap<Composition, usize> = span
        .iter()
        .enumerate()
        .map(|(k, v)| (v.clone(), k))
        .collect();
    let target = DunklSpectrum::of(eta);
    // residual_i[ν] accumulates Σ_μ c_μ [𝒟_i z^μ]_ν over assigned μ
    let mut residual: Vec<BTreeMap<usize, AlphaRat>> = vec![BTreeMap::new(); n];
    let mut coeff: Vec<AlphaRat> = vec![AlphaRat::zero(); span.len()];

    let push_columns = |k: usize,
                        c: &AlphaRat,
                        residual: &mut Vec<BTreeMap<usize, AlphaRat>>| {
        for i in 1..=n {
            for (comp, w) in dunkl_monomial(i, &span[k]) {
                if let Some(&t) = index.get(&comp) {
                    let entry = residual[i - 1].entry(t).or_insert_with(AlphaRat::zero);
                    *entry = &*entry + &(&w * c);
                }
            }
        }
    };

    coeff[0] = AlphaRat::one();
    push_columns(0, &AlphaRat::one(), &mut residual);

    for k in 1..span.len() {
        let nu = &span[k];
        // pick an operator whose eigenvalue separates ν from η
        let i = (0..n)
            .find(|&i| nu[i] != eta[i])
            .expect("distinct compositions differ somewhere");
        let nu_hat = dunkl_eigenvalue(nu, i + 1);
        let gap = &AlphaRat::from_poly(nu_hat) - &AlphaRat::from_poly(target.values[i].clone());
        assert!(!gap.is_zero(), "eigenvalues must separate the span");
        // (ν̂_i − η̂_i) c_ν + residual_i[ν] = 0
        let r = residual[i]
            .get(&k)
            .cloned()
            .unwrap_or_else(AlphaRat::zero);
        let c = &(-&r) / &gap;
        if !c.is_zero() {
            coeff[k] = c.clone();
            push_columns(k, &c, &mut residual);
        }
    }

    let mut out = SPoly::zero(n);
    for (k, c) in coeff.into_iter().enumerate() {
        if !c.is_zero() {
            out.add_term(
                SuperMono {
                    g: crate::ring::GrassMono::EMPTY,
                    z: span[k].clone(),
                },
                c,
            );
        }
    }
    // independent consistency check with one full operator application
    debug_assert!({
        let lhs = dunkl_apply(1, &out).unwrap();
        let rhs = out.scale(&AlphaRat::from_poly(target.values[0].clone()));
        lhs == rhs
    });
    out
}

/// Report from the degenerate Hecke relation check.
#[derive(Debug, Clone, Default)]
pub struct HeckeReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl HeckeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks K_{i,i+1}𝒟_{i+1} − 𝒟_i K_{i,i+1} = −1 and the commutation of
/// disjoint-index pairs on every z-monomial of total degree ≤ max_degree.
pub fn verify_hecke(n: usize, max_degree: u32) -> HeckeReport {
    use crate::ring::Exchange;
    let mut report = HeckeReport::default();
    for e in monomials_up_to(n, max_degree) {
        let f = SPoly::zmono(e.clone());
        for i in 1..n {
            // K_{i,i+1}𝒟_{i+1}f − 𝒟_i K_{i,i+1}f = −f
            let lhs = dunkl_apply(i + 1, &f)
                .unwrap()
                .exchange(i - 1, i, Exchange::K)
                .unwrap()
                .sub(&dunkl_apply(i, &f.exchange(i - 1, i, Exchange::K).unwrap()).unwrap());
            report.checked += 1;
            if lhs != f.neg() {
                report
                    .violations
                    .push(format!("hecke braid at i={i} on z^{e:?}"));
            }
        }
        for j in 1..n {
            for i in 1..=n {
                if i == j || i == j + 1 {
                    continue;
                }
                let lhs = dunkl_apply(i, &f)
                    .unwrap()
                    .exchange(j - 1, j, Exchange::K)
                    .unwrap();
                let rhs = dunkl_apply(i, &f.exchange(j - 1, j, Exchange::K).unwrap()).unwrap();
                report.checked += 1;
                if lhs != rhs {
                    report
                        .violations
                        .push(format!("disjoint commutation (i={i}, j={j}) on z^{e:?}"));
                }
            }
        }
    }
    report
}

/// Checks the three-case law for K_{i,i+1} E_η with δ = η̂_i − η̂_{i+1}:
/// for η_i > η_{i+1}:  K E_η = (1/δ) E_η + (1 − 1/δ²) E_{sη};
/// for η_i = η_{i+1}:  K E_η = E_η;
/// for η_i < η_{i+1}:  K E_η = (1/δ) E_η + E_{sη}.
pub fn verify_swap_action(eta: &[u32]) -> HeckeReport {
    use crate::ring::Exchange;
    let n = eta.len();
    let mut report = HeckeReport::default();
    let e = nonsym_jack(eta);
    for i in 1..n {
        let swapped = e.exchange(i - 1, i, Exchange::K).unwrap();
        let rhs = if eta[i - 1] == eta[i] {
            (*e).clone()
        } else {
            let mut seta = eta.to_vec();
            seta.swap(i - 1, i);
            let es = nonsym_jack(&seta);
            let delta = &AlphaRat::from_poly(dunkl_eigenvalue(eta, i))
                - &AlphaRat::from_poly(dunkl_eigenvalue(eta, i + 1));
            let inv = delta.inv().unwrap();
            if eta[i - 1] > eta[i] {
                let c = &AlphaRat::one() - &(&inv * &inv);
                e.scale(&inv).add(&es.scale(&c))
            } else {
                e.scale(&inv).add(&es)
            }
        };
        report.checked += 1;
        if swapped != rhs {
            report.violations.push(format!("swap law at i={i} for η={eta:?}"));
        }
    }
    report
}

/// All z-monomial exponent vectors with total degree ≤ max_degree.
pub fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Composition> {
    fn rec(n: usize, left: u32, cur: &mut Composition, out: &mut Vec<Composition>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut exact = Vec::new();
        rec(n - 1, d, &mut Vec::new(), &mut exact);
        for mut head in exact {
            let used: u32 = head.iter().sum();
            head.push(d - used);
            out.push(head);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All compositions of weight exactly `w` in n parts.
pub fn compositions_of(w: u32, n: usize) -> Vec<Composition> {
    monomials_up_to(n, w)
        .into_iter()
        .filter(|c| c.iter().sum::<u32>() == w)
        .collect()
}
