//! Bases of the symmetric-superpolynomial sectors: the monomials m_Λ, the
//! quasi-power sums q_Λ, the prescribed-symmetry polynomials 𝓔_Λ, the
//! Jack superpolynomials P_Λ, and the change-of-basis machinery.
//!
//! The defining term of m_Λ reads the diagram top to bottom: row i of the
//! marked list contributes its decoration at variable i and z_i^{part}.
//! m_Λ is the sum of the distinct triplet-exchange images of that term,
//! and P_Λ is normalized to be monic on m_Λ. All P construction sums the
//! full N! permutations; a coset fast path exists behind the same
//! contract for the analytic-normalization pair.

use crate::exact::{AlphaRat, Rat};
use crate::nsjack::{nonsym_jack, NsJackError};
use crate::ring::{
    coset_representatives, permutations, Gen, GrassMono, RingError, SPoly, SuperMono,
};
use crate::spart::{
    f_multiplicities, list_sector, Decor, Sector, SpartError, SuperPartition, Variant,
};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SJackError {
    #[error(transparent)]
    Spart(#[from] SpartError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    NsJack(#[from] NsJackError),
    #[error("polynomial is not symmetric (reconstruction mismatch)")]
    NotSymmetric,
    #[error("polynomial mixes fermionic sectors or degrees")]
    MixedSector,
    #[error("change of basis is singular")]
    SingularBasis,
}

/// [φ;θ]_M for the variant: block 1 decorations on variables 1..M₁, block
/// 2 on M₁+1..M₂, block 3 on M₂+1..M₃. Canonical with sign +1.
pub fn phi_theta_prefix(sector: &Sector, n: usize, variant: Variant) -> GrassMono {
    let mut gens: Vec<Gen> = Vec::new();
    let bounds = [0, sector.m1(), sector.m2(), sector.m3()];
    for b in 0..3 {
        for i in bounds[b]..bounds[b + 1] {
            match variant.decor[b] {
                Decor::Doublet => {
                    gens.push(Gen::Phi(i));
                    gens.push(Gen::Theta(i));
                }
                Decor::Phi => gens.push(Gen::Phi(i)),
                Decor::Theta => gens.push(Gen::Theta(i)),
            }
        }
    }
    assert!(sector.m3() <= n);
    let (sign, g) = GrassMono::from_gens(&gens).expect("prefix generators are distinct");
    debug_assert_eq!(sign, 1);
    g
}

/// f_Λ = f_{Λ̄̂}·f_{Λˢ} with part 0 counted only in the doublet block.
pub fn f_lambda(sp: &SuperPartition, variant: Variant) -> Rat {
    let d = variant.doublet_block();
    &f_multiplicities(sp.block(d), true) * &f_multiplicities(sp.ls(), false)
}

/// Order of the stabilizer of the defining term inside S_N: f_Λ times the
/// permutations of the zero-padding of the symmetric block. Equals f_Λ
/// whenever ℓ(Λ) ≥ N − 1.
pub fn stab_order(sp: &SuperPartition, n: usize, variant: Variant) -> Rat {
    let pad = (n - sp.length()) as u64;
    &f_lambda(sp, variant) * &Rat::factorial(pad)
}

/// The defining term of m_Λ: canonical monomial plus its diagram-order
/// sign ε (the product of row decorations in diagram order equals
/// ε·canonical).
pub fn defining_mono(
    sp: &SuperPartition,
    n: usize,
    variant: Variant,
) -> Result<(i32, SuperMono), SpartError> {
    if sp.length() > n {
        return Err(SpartError::TooLong {
            len: sp.length(),
            n,
        });
    }
    let mut gens: Vec<Gen> = Vec::new();
    let mut z = vec![0u32; n];
    for (i, row) in sp.marked_rows().iter().enumerate() {
        z[i] = row.part;
        if row.block < 3 {
            match variant.decor[row.block] {
                Decor::Doublet => {
                    gens.push(Gen::Phi(i));
                    gens.push(Gen::Theta(i));
                }
                Decor::Phi => gens.push(Gen::Phi(i)),
                Decor::Theta => gens.push(Gen::Theta(i)),
            }
        }
    }
    let (sign, g) = GrassMono::from_gens(&gens).expect("row generators are distinct");
    Ok((sign, SuperMono { g, z }))
}

/// The monomial superpolynomial m_Λ: the sum over distinct triplet-
/// exchange images of the defining term.
pub fn monomial(sp: &SuperPartition, n: usize, variant: Variant) -> Result<SPoly, SJackError> {
    let (sign, m0) = defining_mono(sp, n, variant)?;
    let mut seed = SPoly::from_term(m0, AlphaRat::one());
    if sign < 0 {
        seed = seed.neg();
    }
    let inv = AlphaRat::from_rat(stab_order(sp, n, variant))
        .inv()
        .expect("stabilizer order is positive");
    Ok(seed.symmetrize_full().scale(&inv))
}

/// The quasi-power sum q_Λ = p̄̂_{Λ̄̂}·m_{(;Λ̃;Λ̂;)}·p_{Λˢ} (SAA form).
pub fn quasi_power_sum(sp: &SuperPartition, n: usize) -> Result<SPoly, SJackError> {
    quasi_power_sum_variant(sp, n, Variant::SAA)
}

/// The variant quasi-power sum: the doublet power sums run over the
/// doublet-decorated block, the middle monomial keeps the two
/// lone-fermion blocks in their positions.
pub fn quasi_power_sum_variant(
    sp: &SuperPartition,
    n: usize,
    variant: Variant,
) -> Result<SPoly, SJackError> {
    if sp.length() > n {
        return Err(SpartError::TooLong {
            len: sp.length(),
            n,
        }
        .into());
    }
    let d = variant.doublet_block();
    let mut acc = SPoly::one(n);
    // doublet power sums Σ_k φ_kθ_k z_k^r
    for &r in sp.block(d) {
        let mut factor = SPoly::zero(n);
        for k in 0..n {
            let mut z = vec![0; n];
            z[k] = r;
            factor.add_term(
                SuperMono {
                    g: GrassMono {
                        phi: 1 << k,
                        theta: 1 << k,
                    },
                    z,
                },
                AlphaRat::one(),
            );
        }
        acc = acc.mul(&factor);
    }
    let mut middle_blocks: [Vec<u32>; 4] = [vec![], vec![], vec![], vec![]];
    for b in 0..3 {
        if b != d {
            middle_blocks[b] = sp.block(b).to_vec();
        }
    }
    let middle = SuperPartition::validate_for(middle_blocks, variant)?;
    acc = acc.mul(&monomial(&middle, n, variant)?);
    for &r in sp.ls() {
        let mut factor = SPoly::zero(n);
        for k in 0..n {
            let mut z = vec![0; n];
            z[k] = r;
            factor.add_term(
                SuperMono {
                    g: GrassMono::EMPTY,
                    z,
                },
                AlphaRat::one(),
            );
        }
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Λ^R: every block reversed in place, the symmetric block first padded
/// with zeros to fill the N variables.
pub fn reversed_composition(sp: &SuperPartition, n: usize) -> Result<Vec<u32>, SpartError> {
    if sp.length() > n {
        return Err(SpartError::TooLong {
            len: sp.length(),
            n,
        });
    }
    let mut out: Vec<u32> = Vec::with_capacity(n);
    for b in 0..3 {
        out.extend(sp.block(b).iter().rev());
    }
    let m3 = sp.sector().m3();
    let mut ls = sp.ls().to_vec();
    ls.resize(n - m3, 0);
    out.extend(ls.iter().rev());
    Ok(out)
}

/// The Jack polynomial with prescribed symmetry 𝓔_Λ: block-wise
/// (anti)symmetrized E_{Λ^R}, z-only. Symmetric in the doublet and
/// trailing blocks, antisymmetric in the two lone-fermion blocks.
pub fn prescribed_jack(
    sp: &SuperPartition,
    n: usize,
    variant: Variant,
) -> Result<SPoly, SJackError> {
    let sector = sp.sector();
    let e = nonsym_jack(&reversed_composition(sp, n)?);
    let bounds = [0, sector.m1(), sector.m2(), sector.m3(), n];
    let antisym: Vec<bool> = (0..3)
        .map(|b| variant.decor[b] != Decor::Doublet)
        .chain([false])
        .collect();
    let mut acc = SPoly::zero(n);
    for (block, &anti) in antisym.iter().enumerate() {
        let lo = bounds[block];
        let hi = bounds[block + 1];
        let width = hi - lo;
        let mut next = SPoly::zero(n);
        let base = if block == 0 { (*e).clone() } else { acc };
        for sub in permutations(width) {
            let mut perm: Vec<usize> = (0..n).collect();
            for (k, &v) in sub.iter().enumerate() {
                perm[lo + k] = lo + v;
            }
            let image = base.apply_perm_z(&perm);
            if anti && perm_parity(&sub) < 0 {
                next.add_assign(&image.neg());
            } else {
                next.add_assign(&image);
            }
        }
        acc = next;
    }
    // overall sign and normalization from the construction
    let mut a_lengths = Vec::new();
    for b in 0..3 {
        if variant.decor[b] != Decor::Doublet {
            a_lengths.push(sector.m[b] as u64);
        }
    }
    let sgn = if (binom2(a_lengths[0]) + binom2(a_lengths[1])) % 2 == 1 {
        -&AlphaRat::one()
    } else {
        AlphaRat::one()
    };
    let f = AlphaRat::from_rat(stab_order(sp, n, variant)).inv().unwrap();
    Ok(acc.scale(&(&sgn * &f)))
}

fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

fn perm_parity(perm: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Σ_{ω∈S_N} 𝒦_ω (g·f) for a single Grassmann monomial g and a z-only
/// polynomial f, accumulated over a common denominator so that each
/// output coefficient is normalized exactly once. Returns the map of
/// polynomial numerators together with the common denominator.
fn symmetrize_dressed(
    g0: GrassMono,
    f: &SPoly,
    n: usize,
) -> (std::collections::BTreeMap<SuperMono, crate::exact::AlphaPoly>, crate::exact::AlphaPoly) {
    use crate::exact::AlphaPoly;
    // common denominator of the seed coefficients
    let mut den = AlphaPoly::one();
    for (_, c) in f.terms() {
        let g = den.gcd(c.den());
        let (q, r) = c.den().div_rem(&g);
        debug_assert!(r.is_zero());
        den = &den * &q;
    }
    let seed: Vec<(&SuperMono, AlphaPoly)> = f
        .terms()
        .map(|(m, c)| {
            let (scale, r) = den.div_rem(c.den());
            debug_assert!(r.is_zero());
            (m, c.num() * &scale)
        })
        .collect();
    let mut acc: std::collections::BTreeMap<SuperMono, AlphaPoly> =
        std::collections::BTreeMap::new();
    for perm in permutations(n) {
        let (sign, g2) = g0.permute(&perm, &perm);
        for (m, num) in &seed {
            let mut z2 = vec![0; n];
            for (i, &e) in m.z.iter().enumerate() {
                z2[perm[i]] = e;
            }
            let key = SuperMono { g: g2, z: z2 };
            let entry = acc.entry(key).or_insert_with(AlphaPoly::zero);
            *entry = if sign < 0 { &*entry - num } else { &*entry + num };
        }
    }
    acc.retain(|_, v| !v.is_zero());
    (acc, den)
}

/// Which construction of P_Λ to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JackRoute {
    /// Full S_N symmetrization of [φ;θ]_M E_{Λ^R}.
    Direct,
    /// Coset symmetrization of [φ;θ]_M 𝓔_Λ.
    ViaPrescribed,
}

/// The N=2 Jack superpolynomial P_Λ, monic on m_Λ.
pub fn super_jack(
    sp: &SuperPartition,
    n: usize,
    variant: Variant,
    route: JackRoute,
) -> Result<SPoly, SJackError> {
    if route == JackRoute::Direct {
        // fast path: single-denominator accumulation, one normalization
        // per output term, monic division folded into the coefficients
        let sector = sp.sector();
        let g0 = phi_theta_prefix(&sector, n, variant);
        let e = nonsym_jack(&reversed_composition(sp, n)?);
        let (acc, _den) = symmetrize_dressed(g0, &e, n);
        let (eps, m0) = defining_mono(sp, n, variant)?;
        let lead = acc
            .get(&m0)
            .cloned()
            .expect("leading monomial must appear");
        let lead = if eps < 0 { -&lead } else { lead };
        let mut out = SPoly::zero(n);
        for (m, num) in acc {
            out.add_term(m, AlphaRat::new(num, lead.clone()).expect("nonzero lead"));
        }
        return Ok(out);
    }
    let raw = match route {
        JackRoute::Direct => unreachable!(),
        JackRoute::ViaPrescribed => {
            let sector = sp.sector();
            let prefix = SPoly::from_term(
                SuperMono {
                    g: phi_theta_prefix(&sector, n, variant),
                    z: vec![0; n],
                },
                AlphaRat::one(),
            );
            let script_e = prescribed_jack(sp, n, variant)?;
            let seed = prefix.mul(&script_e);
            let mut acc = SPoly::zero(n);
            for perm in coset_representatives(n, &sector) {
                acc.add_assign(&seed.apply_perm(&perm));
            }
            acc
        }
    };
    let (eps, m0) = defining_mono(sp, n, variant)?;
    let mut lead = raw.coeff(&m0);
    if eps < 0 {
        lead = -&lead;
    }
    assert!(!lead.is_zero(), "leading monomial must appear");
    Ok(raw.scale(&lead.inv().unwrap()))
}

/// The Jack superpolynomial with the construction's own normalization:
/// the signed N!-symmetrization of [φ;θ]_M E_{Λ^R} divided by the
/// stabilizer order, monic on the slot-ordered defining term. The
/// evaluation formula applies to this scale; it differs from the
/// diagram-monic [`super_jack`] by a label sign.
pub fn super_jack_raw(
    sp: &SuperPartition,
    n: usize,
    variant: Variant,
) -> Result<SPoly, SJackError> {
    let sector = sp.sector();
    let g0 = phi_theta_prefix(&sector, n, variant);
    let e = nonsym_jack(&reversed_composition(sp, n)?);
    let (acc, den) = symmetrize_dressed(g0, &e, n);
    let mut a_lengths = Vec::new();
    for b in 0..3 {
        if variant.decor[b] != Decor::Doublet {
            a_lengths.push(sector.m[b] as u64);
        }
    }
    let mut scale = AlphaRat::from_rat(stab_order(sp, n, variant)).inv().unwrap();
    if (binom2(a_lengths[0]) + binom2(a_lengths[1])) % 2 == 1 {
        scale = -&scale;
    }
    let mut out = SPoly::zero(n);
    for (m, num) in acc {
        let c = AlphaRat::new(num, den.clone()).expect("nonzero denominator");
        out.add_term(m, &c * &scale);
    }
    Ok(out)
}

/// The analytic-normalization pair (P, 𝓔): the same objects with the
/// construction's own scale, satisfying P = Σ_{ω∈S_(M)} 𝒦_ω [φ;θ]_M 𝓔
/// exactly. Used by the analytic-norm ratio checks.
pub fn analytic_pair(
    sp: &SuperPartition,
    n: usize,
    variant: Variant,
) -> Result<(SPoly, SPoly), SJackError> {
    let sector = sp.sector();
    let prefix = SPoly::from_term(
        SuperMono {
            g: phi_theta_prefix(&sector, n, variant),
            z: vec![0; n],
        },
        AlphaRat::one(),
    );
    let script_e = prescribed_jack(sp, n, variant)?;
    let seed = prefix.mul(&script_e);
    let mut p = SPoly::zero(n);
    for perm in coset_representatives(n, &sector) {
        p.add_assign(&seed.apply_perm(&perm));
    }
    Ok((p, script_e))
}

/// Basis of a [`BasisExpansion`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    M,
    Q,
    P,
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::Q => "q",
            Basis::P => "P",
        }
    }
}

/// The expansion of a symmetric superpolynomial in a named basis, indexed
/// by superpartitions in the deterministic sector order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub sector: Sector,
    pub arity: usize,
    pub coeffs: Vec<(SuperPartition, AlphaRat)>,
}

impl BasisExpansion {
    pub fn coeff(&self, sp: &SuperPartition) -> AlphaRat {
        self.coeffs
            .iter()
            .find(|(l, _)| l == sp)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(AlphaRat::zero)
    }
}

/// Reads the sector of a homogeneous symmetric superpolynomial.
pub fn sector_of(f: &SPoly) -> Result<Sector, SJackError> {
    let (mbd, mt, mh) = f.fermion_numbers().ok_or(SJackError::MixedSector)?;
    let degree = f.z_degree().ok_or(SJackError::MixedSector)?;
    Ok(Sector::new(degree, [mbd, mt, mh]))
}

/// Expands a homogeneous symmetric superpolynomial in the monomial basis.
pub fn expand_monomial(
    f: &SPoly,
    variant: Variant,
) -> Result<BasisExpansion, SJackError> {
    let n = f.arity();
    if f.is_zero() {
        return Err(SJackError::MixedSector);
    }
    let sector = sector_of_variant(f, variant)?;
    let labels = list_sector(sector, n, variant)?;
    let mut coeffs = Vec::new();
    let mut recombined = SPoly::zero(n);
    for lab in labels {
        let (eps, m0) = defining_mono(&lab, n, variant)?;
        let mut c = f.coeff(&m0);
        if eps < 0 {
            c = -&c;
        }
        if !c.is_zero() {
            recombined.add_assign(&monomial(&lab, n, variant)?.scale(&c));
            coeffs.push((lab, c));
        }
    }
    if &recombined != f {
        return Err(SJackError::NotSymmetric);
    }
    Ok(BasisExpansion {
        basis: Basis::M,
        sector,
        arity: n,
        coeffs,
    })
}

/// Reads the positional sector of a homogeneous polynomial under a
/// variant decoration scheme.
pub fn sector_of_variant_pub(f: &SPoly, variant: Variant) -> Result<Sector, SJackError> {
    sector_of_variant(f, variant)
}

fn sector_of_variant(f: &SPoly, variant: Variant) -> Result<Sector, SJackError> {
    let (mbd, mt, mh) = f.fermion_numbers().ok_or(SJackError::MixedSector)?;
    let degree = f.z_degree().ok_or(SJackError::MixedSector)?;
    // fermion counts are by decoration; map back to block positions
    let mut m = [0usize; 3];
    for b in 0..3 {
        m[b] = match variant.decor[b] {
            Decor::Doublet => mbd,
            Decor::Phi => mt,
            Decor::Theta => mh,
        };
    }
    Ok(Sector::new(degree, m))
}

/// Expands a homogeneous symmetric superpolynomial in the quasi-power-sum
/// basis by solving the change of basis against the monomials.
pub fn expand_quasi(f: &SPoly) -> Result<BasisExpansion, SJackError> {
    expand_quasi_variant(f, Variant::SAA)
}

pub fn expand_quasi_variant(f: &SPoly, variant: Variant) -> Result<BasisExpansion, SJackError> {
    let n = f.arity();
    let sector = sector_of_variant(f, variant)?;
    let labels = list_sector(sector, n, variant)?;
    let fm = expand_monomial(f, variant)?;
    // columns: m-expansions of each q
    let mut columns: Vec<BTreeMap<SuperPartition, AlphaRat>> = Vec::new();
    for lab in &labels {
        let q = quasi_power_sum_variant(lab, n, variant)?;
        let qm = expand_monomial(&q, variant)?;
        columns.push(qm.coeffs.into_iter().collect());
    }
    // Gaussian elimination over ℚ(α) on the labels × labels system
    let dim = labels.len();
    let mut a = vec![vec![AlphaRat::zero(); dim]; dim];
    let mut b = vec![AlphaRat::zero(); dim];
    for (r, lab) in labels.iter().enumerate() {
        for (c, col) in columns.iter().enumerate() {
            if let Some(v) = col.get(lab) {
                a[r][c] = v.clone();
            }
        }
        b[r] = fm.coeff(lab);
    }
    let x = solve_linear(&mut a, &mut b)?;
    let coeffs = labels
        .into_iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(BasisExpansion {
        basis: Basis::Q,
        sector,
        arity: n,
        coeffs,
    })
}

fn solve_linear(
    a: &mut [Vec<AlphaRat>],
    b: &mut [AlphaRat],
) -> Result<Vec<AlphaRat>, SJackError> {
    let dim = b.len();
    let mut col_of_row = vec![usize::MAX; dim];
    let mut used = vec![false; dim];
    for col in 0..dim {
        let pivot = (0..dim)
            .find(|&r| !used[r] && !a[r][col].is_zero())
            .ok_or(SJackError::SingularBasis)?;
        used[pivot] = true;
        col_of_row[pivot] = col;
        let inv = a[pivot][col].inv().expect("pivot nonzero");
        for r in 0..dim {
            if r == pivot || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in 0..dim {
                let delta = &a[pivot][c] * &factor;
                a[r][c] = &a[r][c] - &delta;
            }
            let delta = &b[pivot] * &factor;
            b[r] = &b[r] - &delta;
        }
    }
    let mut x = vec![AlphaRat::zero(); dim];
    for r in 0..dim {
        let col = col_of_row[r];
        x[col] = &b[r] / &a[r][col];
    }
    Ok(x)
}

/// Recombines a basis expansion into a polynomial.
pub fn recombine(exp: &BasisExpansion, variant: Variant) -> Result<SPoly, SJackError> {
    let mut acc = SPoly::zero(exp.arity);
    for (lab, c) in &exp.coeffs {
        let basis_poly = match exp.basis {
            Basis::M => monomial(lab, exp.arity, variant)?,
            Basis::Q => quasi_power_sum(lab, exp.arity)?,
            Basis::P => super_jack(lab, exp.arity, variant, JackRoute::Direct)?,
        };
        acc.add_assign(&basis_poly.scale(c));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_alpha_rat;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    fn ap(s: &str) -> AlphaRat {
        parse_alpha_rat(s).unwrap()
    }

    #[test]
    fn prefix_and_f_examples() {
        // M = (1,1,2) → φ_1θ_1 φ_2 θ_3θ_4
        let g = phi_theta_prefix(&Sector::new(0, [1, 1, 2]), 4, Variant::SAA);
        assert_eq!(g.phi, 0b0011);
        assert_eq!(g.theta, 0b1101);
        // f_{(0,0;1;;1)} = 2!·1! = 2
        assert_eq!(f_lambda(&sp("(0,0;1;;1)"), Variant::SAA), Rat::from(2));
        assert_eq!(f_lambda(&sp("(;;;)"), Variant::SAA), Rat::one());
    }

    #[test]
    fn monomial_example_3_2() {
        // m_{(;1,0;2;)} at N=3 = φ1φ2θ3(z1−z2)z3² + φ2φ3θ1(z2−z3)z1²
        //                       + φ1φ3θ2(z1−z3)z2²
        let n = 3;
        let m = monomial(&sp("(;1,0;2;)"), n, Variant::SAA).unwrap();
        let term = |pa: usize, pb: usize, t: usize, za: usize, zb: usize, zc: usize| {
            let diff = SPoly::zvar(n, za).sub(&SPoly::zvar(n, zb));
            let zsq = SPoly::zvar(n, zc).mul(&SPoly::zvar(n, zc));
            SPoly::phi(n, pa)
                .mul(&SPoly::phi(n, pb))
                .mul(&SPoly::theta(n, t))
                .mul(&diff)
                .mul(&zsq)
        };
        let want = term(0, 1, 2, 0, 1, 2)
            .add(&term(1, 2, 0, 1, 2, 0))
            .add(&term(0, 2, 1, 0, 2, 1));
        assert_eq!(m, want);
        assert!(m.is_symmetric());
    }

    #[test]
    fn monomial_trivial_and_errors() {
        let m = monomial(&sp("(;;;1)"), 2, Variant::SAA).unwrap();
        assert_eq!(m, SPoly::zvar(2, 0).add(&SPoly::zvar(2, 1)));
        assert!(monomial(&sp("(;;;1,1,1)"), 2, Variant::SAA).is_err());
    }

    #[test]
    fn quasi_power_sum_examples() {
        let n = 3;
        // q_{(;1,0;2;)} = m_{(;1,0;2;)}
        let q = quasi_power_sum(&sp("(;1,0;2;)"), n).unwrap();
        assert_eq!(q, monomial(&sp("(;1,0;2;)"), n, Variant::SAA).unwrap());
        // q_{(0,0;1;;1)} = (Σφθ)²(Σφz)(Σz)
        let n = 4;
        let q = quasi_power_sum(&sp("(0,0;1;;1)"), n).unwrap();
        let mut v = SPoly::zero(n);
        let mut pw = SPoly::zero(n);
        let mut p1 = SPoly::zero(n);
        for k in 0..n {
            v.add_assign(&SPoly::phi(n, k).mul(&SPoly::theta(n, k)));
            pw.add_assign(&SPoly::phi(n, k).mul(&SPoly::zvar(n, k)));
            p1.add_assign(&SPoly::zvar(n, k));
        }
        assert_eq!(q, v.mul(&v).mul(&pw).mul(&p1));
        // empty label
        assert_eq!(quasi_power_sum(&sp("(;;;)"), 2).unwrap(), SPoly::one(2));
    }

    #[test]
    fn reversed_composition_pads_before_reversal() {
        let lam = sp("(0;0;1;)");
        assert_eq!(reversed_composition(&lam, 4).unwrap(), vec![0, 0, 1, 0]);
        let mu = sp("(2;2,0;1,0;3)");
        assert_eq!(
            reversed_composition(&mu, 7).unwrap(),
            vec![2, 0, 2, 0, 1, 0, 3]
        );
    }

    #[test]
    fn prescribed_jack_basics() {
        // 𝓔 for (;0;;) at N=1 is E_{(0)} = 1
        let e = prescribed_jack(&sp("(;0;;)"), 1, Variant::SAA).unwrap();
        assert_eq!(e, SPoly::one(1));
        // (;1,0;;) at N=2: antisymmetric under K_12
        let e = prescribed_jack(&sp("(;1,0;;)"), 2, Variant::SAA).unwrap();
        let swapped = e.exchange(0, 1, crate::ring::Exchange::K).unwrap();
        assert_eq!(swapped, e.neg());
        assert!(!e.is_zero());
    }

    #[test]
    fn table2_sector_1_111() {
        // all four rows of the first regression block, N = ℓ(Λ)+1
        let p = |s: &str, n: usize| {
            super_jack(&sp(s), n, Variant::SAA, JackRoute::Direct).unwrap()
        };
        let m = |s: &str, n: usize| monomial(&sp(s), n, Variant::SAA).unwrap();

        let p4 = p("(0;0;0;1)", 5);
        assert_eq!(p4, m("(0;0;0;1)", 5));

        let p3 = p("(0;0;1;)", 4);
        let want = m("(0;0;1;)", 4).add(&m("(0;0;0;1)", 4).scale(&ap("-1/(α+3)")));
        assert_eq!(p3, want);

        let p2 = p("(0;1;0;)", 4);
        let want = m("(0;1;0;)", 4)
            .add(&m("(0;0;1;)", 4).scale(&ap("-1/(α+2)")))
            .add(&m("(0;0;0;1)", 4).scale(&ap("1/(α+2)")));
        assert_eq!(p2, want);

        let p1 = p("(1;0;0;)", 4);
        let want = m("(1;0;0;)", 4)
            .add(&m("(0;1;0;)", 4).scale(&ap("1/(α+1)")))
            .add(&m("(0;0;1;)", 4).scale(&ap("-1/(α+1)")))
            .add(&m("(0;0;0;1)", 4).scale(&ap("1/(α+1)")));
        assert_eq!(p1, want);
    }

    #[test]
    fn construction_routes_agree() {
        for s in ["(0;0;1;)", "(1;0;0;)", "(0;0;0;1)", "(1;1;0;)", "(0;1;1;)"] {
            let lam = sp(s);
            let n = lam.length() + 1;
            let a = super_jack(&lam, n, Variant::SAA, JackRoute::Direct).unwrap();
            let b = super_jack(&lam, n, Variant::SAA, JackRoute::ViaPrescribed).unwrap();
            assert_eq!(a, b, "routes disagree for {s}");
        }
    }

    #[test]
    fn raw_construction_equals_coset_route() {
        // the signed N!-symmetrization and the coset sum over the
        // prescribed-symmetry polynomial produce the same element
        for s in ["(0;1;0;)", "(1;0;0;)", "(0;0;1;1)"] {
            let lam = sp(s);
            let n = lam.length() + 1;
            let raw = super_jack_raw(&lam, n, Variant::SAA).unwrap();
            let (coset, _) = analytic_pair(&lam, n, Variant::SAA).unwrap();
            assert_eq!(raw, coset, "raw/coset mismatch for {s}");
        }
    }

    #[test]
    fn analytic_pair_satisfies_coset_relation() {
        // P = Σ_{ω∈S_(M)} 𝒦_ω [φ;θ]_M 𝓔 by construction; the direct
        // N!-route equals it after the same normalization
        let lam = sp("(0;1;0;)");
        let n = 3;
        let (p_an, _e) = analytic_pair(&lam, n, Variant::SAA).unwrap();
        let monic = super_jack(&lam, n, Variant::SAA, JackRoute::Direct).unwrap();
        // proportional
        let (eps, m0) = defining_mono(&lam, n, Variant::SAA).unwrap();
        let mut lead = p_an.coeff(&m0);
        if eps < 0 {
            lead = -&lead;
        }
        assert_eq!(p_an, monic.scale(&lead));
    }

    #[test]
    fn expand_monomial_round_trip() {
        let lam = sp("(0;1;0;)");
        let n = 4;
        let p = super_jack(&lam, n, Variant::SAA, JackRoute::Direct).unwrap();
        let exp = expand_monomial(&p, Variant::SAA).unwrap();
        assert_eq!(exp.coeff(&lam), AlphaRat::one());
        let back = recombine(&exp, Variant::SAA).unwrap();
        assert_eq!(back, p);
        // single monomial expands to itself
        let m = monomial(&lam, n, Variant::SAA).unwrap();
        let exp = expand_monomial(&m, Variant::SAA).unwrap();
        assert_eq!(exp.coeffs.len(), 1);
        assert_eq!(exp.coeff(&lam), AlphaRat::one());
        // non-symmetric input is rejected
        assert!(expand_monomial(&SPoly::zvar(3, 0), Variant::SAA).is_err());
    }

    #[test]
    fn expand_quasi_structure_of_m11() {
        // the multiplicative power sums mix sectors: with
        // p̃_1 = Σφ_kz_k and p̂_1 = Σθ_kz_k, the product p̃_1p̂_1 equals
        // m_{(;1;1;)} + p̄̂_2 = q_{(;1;1;)} + q_{(2;;;)} at N=2,
        // while m_{(;1;1;)} itself is the single quasi-power sum
        let n = 2;
        let m = monomial(&sp("(;1;1;)"), n, Variant::SAA).unwrap();
        let exp = expand_quasi(&m).unwrap();
        assert_eq!(exp.coeffs.len(), 1);
        assert_eq!(exp.coeff(&sp("(;1;1;)")), AlphaRat::one());

        let mut pt = SPoly::zero(n);
        let mut ph = SPoly::zero(n);
        for k in 0..n {
            pt.add_assign(&SPoly::phi(n, k).mul(&SPoly::zvar(n, k)));
            ph.add_assign(&SPoly::theta(n, k).mul(&SPoly::zvar(n, k)));
        }
        let mixed = pt.mul(&ph);
        // the product mixes the (0,1,1) and (1,0,0) sectors and is
        // rejected by the homogeneity check...
        assert!(matches!(expand_quasi(&mixed), Err(SJackError::MixedSector)));
        // ...while the ring identity p̃_1p̂_1 = m_{(;1;1;)} + q_{(2;;;)}
        // holds exactly, with q_{(2;;;)} = p̄̂_2
        let q2 = quasi_power_sum(&sp("(2;;;)"), n).unwrap();
        assert_eq!(mixed, m.add(&q2));
    }

    #[test]
    fn eqexamples_m_and_q() {
        // first display: P_{(1;2,1,0;;)} at N = 5
        let n = 5;
        let lam = sp("(1;2,1,0;;)");
        let p = super_jack(&lam, n, Variant::SAA, JackRoute::Direct).unwrap();
        let exp = expand_monomial(&p, Variant::SAA).unwrap();
        assert_eq!(exp.coeff(&lam), AlphaRat::one());
        assert_eq!(exp.coeff(&sp("(0;2,1,0;;1)")), ap("1/(α+2)"));
        assert_eq!(exp.coeffs.len(), 2);
        let q = expand_quasi(&p).unwrap();
        assert_eq!(q.coeff(&sp("(0;2,1,0;;1)")), ap("1/(2+α)"));
        assert_eq!(q.coeff(&sp("(0;3,1,0;;)")), ap("-1/(2+α)"));
        assert_eq!(q.coeff(&sp("(1;2,1,0;;)")), ap("(1+α)/(2+α)"));
        assert_eq!(q.coeffs.len(), 3);

        // second display: P_{(0;3,1,0;;)}
        let mu = sp("(0;3,1,0;;)");
        let p = super_jack(&mu, n, Variant::SAA, JackRoute::Direct).unwrap();
        let exp = expand_monomial(&p, Variant::SAA).unwrap();
        assert_eq!(exp.coeff(&mu), AlphaRat::one());
        assert_eq!(exp.coeff(&sp("(0;2,1,0;;1)")), ap("1/(α+1)"));
        assert_eq!(exp.coeff(&sp("(1;2,1,0;;)")), ap("1/(α+1)"));
        assert_eq!(exp.coeffs.len(), 3);
        let q = expand_quasi(&p).unwrap();
        assert_eq!(q.coeff(&sp("(0;2,1,0;;1)")), ap("1/(1+α)"));
        assert_eq!(q.coeff(&sp("(0;3,1,0;;)")), ap("α/(1+α)"));
        assert_eq!(q.coeffs.len(), 2);
    }

    #[test]
    fn super_jack_trivial() {
        let p = super_jack(&sp("(;;;)"), 3, Variant::SAA, JackRoute::Direct).unwrap();
        assert_eq!(p, SPoly::one(3));
        // lowest label equals its monomial (cross-check with the m=P row)
        let lam = sp("(0;0;0;1)");
        let p = super_jack(&lam, 4, Variant::SAA, JackRoute::Direct).unwrap();
        assert_eq!(p, monomial(&lam, 4, Variant::SAA).unwrap());
    }

    #[test]
    fn unitriangular_in_dominance() {
        use crate::spart::{dominance_compare, Dominance};
        for (sec, n) in [
            (Sector::new(1, [1, 1, 1]), 4),
            (Sector::new(2, [1, 1, 1]), 5),
            (Sector::new(3, [0, 2, 1]), 6),
        ] {
            for lam in list_sector(sec, n, Variant::SAA).unwrap() {
                let p = super_jack(&lam, n, Variant::SAA, JackRoute::Direct).unwrap();
                let exp = expand_monomial(&p, Variant::SAA).unwrap();
                assert!(exp.coeff(&lam).is_one());
                for (om, _) in &exp.coeffs {
                    if om != &lam {
                        assert_eq!(
                            dominance_compare(&lam, om).unwrap(),
                            Dominance::Greater,
                            "{om} not below {lam}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_variant_mirror_consistency() {
        // with no doublets, swapping the φ and θ roles is the global
        // φ↔θ relabeling: the SAA' variant of the swapped label matches
        let lam = sp("(;1;0;)");
        let n = 3;
        let p = super_jack(&lam, n, Variant::SAA, JackRoute::Direct).unwrap();
        let mirror_variant = Variant {
            decor: [Decor::Doublet, Decor::Theta, Decor::Phi],
        };
        let q = super_jack(&lam, n, mirror_variant, JackRoute::Direct).unwrap();
        // relabel φ↔θ in p: swap masks with re-canonicalization
        let mut relabeled = SPoly::zero(n);
        for (m, c) in p.terms() {
            let gens: Vec<Gen> = m
                .g
                .gens()
                .into_iter()
                .map(|g| match g {
                    Gen::Phi(i) => Gen::Theta(i),
                    Gen::Theta(i) => Gen::Phi(i),
                })
                .collect();
            let (sign, g2) = GrassMono::from_gens(&gens).unwrap();
            let coeff = if sign < 0 { -c } else { c.clone() };
            relabeled.add_term(SuperMono { g: g2, z: m.z.clone() }, coeff);
        }
        // both are monic on their own defining monomials: proportional ±1
        assert!(relabeled == q || relabeled == q.neg());
    }
}
