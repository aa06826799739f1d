//! The two scalar products and the conjecture engines: the combinatorial
//! product on the quasi-power-sum basis, the analytic product via exact
//! constant-term extraction, the closed-form norm j_Λ, and the evaluation
//! formula at z = 1.
//!
//! Conventions pinned against the worked examples: in the norm's per-box
//! factor the numerator reads its arm from Λ^[0] and its leg from
//! Λ^[i−1] (with Λ^[−1] ≡ Λ^[3]); the denominator reads its arm from
//! Λ^[3] and its leg from Λ^[i].
//!
//! Verification sweeps return structured records rather than aborting on
//! the first failure.

use crate::charges::ChargeError;
use crate::exact::{AlphaPoly, AlphaRat, ExactError, Rat};
use crate::ring::{RingError, SPoly};
use crate::sjack::{
    analytic_pair, expand_quasi_variant, phi_theta_prefix, super_jack, super_jack_raw, JackRoute,
    SJackError,
};
use crate::spart::{
    box_classes, list_sector, skew_delta, xi_lambda, z_lambda, Decor, Partition, Sector,
    SpartError, SuperPartition, Variant,
};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InnerError {
    #[error(transparent)]
    Spart(#[from] SpartError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    SJack(#[from] SJackError),
    #[error(transparent)]
    Charge(#[from] ChargeError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("combinatorial product needs N ≥ {needed} for sector {sector} (got {got})")]
    IncompleteSector {
        sector: Sector,
        needed: usize,
        got: usize,
    },
}

/// ⟨q_Λ|q_Λ⟩ = α^{ℓ(Λ)} ξ_{Λ̄̂} z_{Λˢ}.
///
/// The α-power counts every part of Λ, zeros included: only with that
/// exponent do the sector sweeps reproduce the closed-form norm with its
/// α^{M₃} prefactor (the diagonal ratios, which the orthogonality checks
/// use, are insensitive to the per-sector constant α^{m̃+m̂}).
pub fn quasi_norm_weight(sp: &SuperPartition) -> AlphaRat {
    quasi_norm_weight_variant(sp, Variant::SAA)
}

/// The variant weight reads ξ from the doublet-decorated block.
pub fn quasi_norm_weight_variant(sp: &SuperPartition, variant: Variant) -> AlphaRat {
    let power = sp.length();
    let mut acc = AlphaRat::from_poly(AlphaPoly::monomial(Rat::one(), power));
    acc = acc.scale_rat(&xi_lambda(sp.block(variant.doublet_block())));
    acc.scale_rat(&z_lambda(sp.ls()))
}

/// The combinatorial scalar product: expand both sides in the
/// quasi-power-sum basis and contract diagonally with the stated weights.
/// Inputs in different sectors pair to zero by definition.
pub fn comb_scalar(f: &SPoly, g: &SPoly) -> Result<AlphaRat, InnerError> {
    comb_scalar_variant(f, g, Variant::SAA)
}

/// The combinatorial product in the variant convention: diagonal on the
/// variant quasi-power-sum basis with the role-permuted weights.
pub fn comb_scalar_variant(
    f: &SPoly,
    g: &SPoly,
    variant: Variant,
) -> Result<AlphaRat, InnerError> {
    if f.is_zero() || g.is_zero() {
        return Ok(AlphaRat::zero());
    }
    let sf = crate::sjack::sector_of(f)?;
    let sg = crate::sjack::sector_of(g)?;
    if sf != sg || f.arity() != g.arity() {
        return Ok(AlphaRat::zero());
    }
    // the diagonal weights carry the stable coefficients only once every
    // sector label fits into the variable count
    let sector = crate::sjack::sector_of_variant_pub(f, variant)?;
    let needed = list_sector(sector, sector.n as usize + sector.m3(), variant)?
        .iter()
        .map(|l| l.length())
        .max()
        .unwrap_or(0);
    if f.arity() < needed {
        return Err(InnerError::IncompleteSector {
            sector,
            needed,
            got: f.arity(),
        });
    }
    let ef = expand_quasi_variant(f, variant)?;
    let eg = expand_quasi_variant(g, variant)?;
    let mut acc = AlphaRat::zero();
    for (lab, cf) in &ef.coeffs {
        let cg = eg.coeff(lab);
        if cg.is_zero() {
            continue;
        }
        acc += &(&(cf * &cg) * &quasi_norm_weight_variant(lab, variant));
    }
    Ok(acc)
}

/// Sparse Laurent polynomials over ℚ used by the constant-term route.
type Laurent = HashMap<Vec<i32>, Rat>;

fn laurent_insert(map: &mut Laurent, key: Vec<i32>, val: Rat) {
    use std::collections::hash_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            if !val.is_zero() {
                v.insert(val);
            }
        }
        Entry::Occupied(mut o) => {
            let s = &*o.get() + &val;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// ∏_{k≠l} (1 − z_k/z_l)^β expanded exactly; memoized per (n, β).
fn power_kernel(n: usize, beta: u32) -> Arc<Laurent> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<Laurent>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(n, beta)) {
        return Arc::clone(hit);
    }
    let mut acc: Laurent = HashMap::new();
    acc.insert(vec![0; n], Rat::one());
    for k in 0..n {
        for l in 0..n {
            if k == l {
                continue;
            }
            for _ in 0..beta {
                let mut next: Laurent = HashMap::new();
                for (e, c) in &acc {
                    laurent_insert(&mut next, e.clone(), c.clone());
                    let mut shifted = e.clone();
                    shifted[k] += 1;
                    shifted[l] -= 1;
                    laurent_insert(&mut next, shifted, -c);
                }
                acc = next;
            }
        }
    }
    let arc = Arc::new(acc);
    cache
        .lock()
        .unwrap()
        .insert((n, beta), Arc::clone(&arc));
    arc
}

/// The analytic scalar product at the integer specialization α = 1/β:
/// Σ over canonical Grassmann monomials of
/// CT_z[ f_g(1/z) g_g(z) ∏_{k≠l}(1 − z_k/z_l)^β ].
pub fn analytic_scalar(f: &SPoly, g: &SPoly, beta: u32) -> Result<Rat, InnerError> {
    assert!(beta >= 1);
    assert_eq!(f.arity(), g.arity());
    let n = f.arity();
    let alpha0 = Rat::new(1, beta as i64);
    // h(z) = Σ_G f_G(1/z)·g_G(z), exactly specialized
    let mut h: Laurent = HashMap::new();
    for (mf, cf) in f.terms() {
        let cf0 = cf.evaluate_at(&alpha0)?;
        for (mg, cg) in g.terms() {
            if mf.g != mg.g {
                continue;
            }
            let cg0 = cg.evaluate_at(&alpha0)?;
            let e: Vec<i32> = mg
                .z
                .iter()
                .zip(&mf.z)
                .map(|(a, b)| *a as i32 - *b as i32)
                .collect();
            laurent_insert(&mut h, e, &cf0 * &cg0);
        }
    }
    let kernel = power_kernel(n, beta);
    let mut ct = Rat::zero();
    for (e, c) in &h {
        let neg: Vec<i32> = e.iter().map(|x| -x).collect();
        if let Some(k) = kernel.get(&neg) {
            ct = &ct + &(c * k);
        }
    }
    Ok(ct)
}

fn arm(core: &Partition, s: (usize, usize)) -> i64 {
    core.part(s.0 - 1) as i64 - s.1 as i64
}

fn leg(core: &Partition, s: (usize, usize)) -> i64 {
    core.conjugate_part(s.1) as i64 - s.0 as i64
}

/// The conjectured combinatorial norm j_Λ.
pub fn norm_conjecture(sp: &SuperPartition, variant: Variant) -> AlphaRat {
    let sector = sp.sector();
    let cores: Vec<Partition> = (0..=3)
        .map(|k| Partition::new(sp.core_partition(k)).unwrap())
        .collect();
    let classes = box_classes(sp, variant);
    let mut acc = AlphaRat::from_poly(AlphaPoly::monomial(Rat::one(), sector.m3()));
    let xi = xi_lambda(sp.block(variant.doublet_block()));
    acc = &acc / &AlphaRat::from_rat(xi);
    for i in 0..=3usize {
        let upper = if i == 0 { &cores[3] } else { &cores[i - 1] };
        for &s in &classes.b[i] {
            let num = AlphaPoly::linear(arm(&cores[0], s) + 1, leg(upper, s));
            let den = AlphaPoly::linear(arm(&cores[3], s), leg(&cores[i], s) + 1);
            acc = &acc * &AlphaRat::new(num, den).expect("denominator factors never vanish");
        }
    }
    acc
}

/// Per-superpartition norm verification record.
#[derive(Debug, Clone)]
pub struct NormRecord {
    pub label: SuperPartition,
    pub computed: AlphaRat,
    pub conjectured: AlphaRat,
    pub matched: bool,
}

/// Compares ⟨P_Λ|P_Λ⟩ with j_Λ for every superpartition of the sector.
pub fn verify_norm(
    sector: Sector,
    n: usize,
    variant: Variant,
) -> Result<Vec<NormRecord>, InnerError> {
    let labels = list_sector(sector, n, variant)?;
    let mut out = Vec::with_capacity(labels.len());
    for lab in labels {
        let p = super_jack(&lab, n, variant, JackRoute::Direct)?;
        let computed = comb_scalar_variant(&p, &p, variant)?;
        let conjectured = norm_conjecture(&lab, variant);
        let matched = (&computed - &conjectured).is_zero();
        out.push(NormRecord {
            label: lab,
            computed,
            conjectured,
            matched,
        });
    }
    Ok(out)
}

/// The evaluation E_{N,M}[F]: strip the fermionic prefix, divide by the
/// Vandermonde products of the two antisymmetrized blocks, then set every
/// z_i = 1. Exact divisibility is guaranteed for sector members.
pub fn evaluate_at_one(
    f: &SPoly,
    sector: &Sector,
    variant: Variant,
) -> Result<AlphaRat, InnerError> {
    let n = f.arity();
    let prefix = phi_theta_prefix(sector, n, variant);
    let mut g = f.project_grassmann(prefix);
    let bounds = [0, sector.m1(), sector.m2(), sector.m3()];
    for b in 0..3 {
        if variant.decor[b] == Decor::Doublet {
            continue;
        }
        for i in bounds[b]..bounds[b + 1] {
            for j in (i + 1)..bounds[b + 1] {
                g = g.div_exact_zij(i, j)?;
            }
        }
    }
    Ok(g.eval_all_ones()?)
}

/// The conjectured evaluation of P_Λ at z = 1 in N variables.
pub fn eval_conjecture(
    sp: &SuperPartition,
    n: usize,
    variant: Variant,
) -> Result<AlphaRat, InnerError> {
    if sp.length() > n {
        return Err(SpartError::TooLong {
            len: sp.length(),
            n,
        }
        .into());
    }
    let sector = sp.sector();
    let lam3 = Partition::new(sp.core_partition(3)).unwrap();
    let lam_cores: Vec<Partition> = (0..=3)
        .map(|k| Partition::new(sp.core_partition(k)).unwrap())
        .collect();
    let classes = box_classes(sp, variant);
    let delta_cells = skew_delta(sp, variant)?;
    // binomial (N − a₁ − a₂ choose d) with d the doublet-block length
    let d = sector.m[variant.doublet_block()];
    let a: usize = (0..3)
        .filter(|&b| variant.decor[b] != Decor::Doublet)
        .map(|b| sector.m[b])
        .sum();
    let binom = binomial(n - a, d);
    let mut acc = AlphaRat::from_rat(&Rat::one() / &binom);
    for &s in &delta_cells {
        // N − ℓ'(s) + α a'(s) on Λ^[3]
        let coleg = (s.0 - 1) as i64;
        let coarm = (s.1 - 1) as i64;
        acc = &acc * &AlphaRat::from_poly(AlphaPoly::linear(coarm, n as i64 - coleg));
    }
    let mut den = AlphaRat::from_rat(xi_lambda(sp.block(variant.doublet_block())));
    for i in 0..=3usize {
        for &s in &classes.b[i] {
            den = &den
                * &AlphaRat::from_poly(AlphaPoly::linear(
                    arm(&lam3, s),
                    leg(&lam_cores[i], s) + 1,
                ));
        }
    }
    Ok(&acc / &den)
}

fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc = &acc * &Rat::from((n - i) as i64);
        acc = &acc / &Rat::from((i + 1) as i64);
    }
    acc
}

/// Per-superpartition evaluation verification record.
#[derive(Debug, Clone)]
pub struct EvalRecord {
    pub label: SuperPartition,
    pub n: usize,
    pub computed: AlphaRat,
    pub conjectured: AlphaRat,
    pub matched: bool,
}

/// Compares the operator evaluation of P_Λ with the closed form for every
/// sector member of length ≤ N.
pub fn verify_eval(
    sector: Sector,
    n: usize,
    variant: Variant,
) -> Result<Vec<EvalRecord>, InnerError> {
    let labels = list_sector(sector, n, variant)?;
    let mut out = Vec::with_capacity(labels.len());
    for lab in labels {
        let p = super_jack_raw(&lab, n, variant)?;
        let computed = evaluate_at_one(&p, &sector, variant)?;
        let conjectured = eval_conjecture(&lab, n, variant)?;
        let matched = (&computed - &conjectured).is_zero();
        out.push(EvalRecord {
            label: lab,
            n,
            computed,
            conjectured,
            matched,
        });
    }
    Ok(out)
}

/// One off-diagonal entry of a Gram matrix check.
#[derive(Debug, Clone)]
pub struct GramRecord {
    pub left: SuperPartition,
    pub right: SuperPartition,
    pub vanished: bool,
}

/// Verifies ⟨P_Λ|P_Ω⟩ = 0 for Λ ≠ Ω under the combinatorial product.
pub fn verify_comb_orthogonality(
    sector: Sector,
    n: usize,
    variant: Variant,
) -> Result<Vec<GramRecord>, InnerError> {
    let labels = list_sector(sector, n, variant)?;
    let ps: Vec<SPoly> = labels
        .iter()
        .map(|l| super_jack(l, n, variant, JackRoute::Direct))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for i in 0..labels.len() {
        for j in (i + 1)..labels.len() {
            let v = comb_scalar_variant(&ps[i], &ps[j], variant)?;
            out.push(GramRecord {
                left: labels[i].clone(),
                right: labels[j].clone(),
                vanished: v.is_zero(),
            });
        }
    }
    Ok(out)
}

/// Analytic-orthogonality record at a β specialization.
#[derive(Debug, Clone)]
pub struct AnalyticRecord {
    pub left: SuperPartition,
    pub right: SuperPartition,
    pub value: Rat,
    pub ok: bool,
}

/// Verifies the analytic Gram matrix of {P_Λ} is diagonal at α = 1/β and
/// that ⟨P|P⟩/⟨𝓔|𝓔⟩ equals the multinomial N!/(m̄̂!m̃!m̂!(N−M₃)!).
pub fn verify_analytic_orthogonality(
    sector: Sector,
    n: usize,
    beta: u32,
    variant: Variant,
) -> Result<Vec<AnalyticRecord>, InnerError> {
    let labels = list_sector(sector, n, variant)?;
    let pairs: Vec<(SPoly, SPoly)> = labels
        .iter()
        .map(|l| analytic_pair(l, n, variant))
        .collect::<Result<_, _>>()?;
    let multinomial = {
        let mut den = Rat::factorial((n - sector.m3()) as u64);
        for &m in &sector.m {
            den = &den * &Rat::factorial(m as u64);
        }
        &Rat::factorial(n as u64) / &den
    };
    let mut out = Vec::new();
    for i in 0..labels.len() {
        for j in 0..labels.len() {
            let v = analytic_scalar(&pairs[i].0, &pairs[j].0, beta)?;
            let ok = if i == j {
                // nonzero norm with the multinomial ratio to ⟨𝓔|𝓔⟩
                let e_norm = analytic_scalar(&pairs[i].1, &pairs[i].1, beta)?;
                !v.is_zero() && !e_norm.is_zero() && (&v / &e_norm) == multinomial
            } else {
                v.is_zero()
            };
            if i <= j {
                out.push(AnalyticRecord {
                    left: labels[i].clone(),
                    right: labels[j].clone(),
                    value: v,
                    ok,
                });
            }
        }
    }
    Ok(out)
}
