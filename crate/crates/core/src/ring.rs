//! The sparse superpolynomial ring in N variable triplets (z_i, φ_i, θ_i)
//! over ℚ(α).
//!
//! Grassmann monomials are stored as a pair of bit masks with a canonical
//! sign convention: the stored monomial denotes the product of its
//! generators sorted by variable index, with φ_i preceding θ_i at equal
//! index. Squares vanish by construction since masks cannot repeat a bit.
//! Every operation that reorders generators tracks the anticommutation
//! sign (θ_iθ_j = −θ_jθ_i, φ_iφ_j = −φ_jφ_i, θ_iφ_j = −φ_jθ_i).
//!
//! An [`SPoly`] maps [`SuperMono`] keys to nonzero ℚ(α) coefficients; the
//! `BTreeMap` key order (φ-mask, θ-mask, then z-exponents) is the
//! deterministic term order used for rendering and serialization.

use crate::exact::{parse_alpha_rat, AlphaRat};
use crate::spart::Sector;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A z-exponent vector of fixed length N.
pub type Composition = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("variable index {0} out of range for arity {1}")]
    IndexOutOfRange(usize, usize),
    #[error("polynomial has Grassmann content where none is allowed")]
    GrassmannContent,
    #[error("division by (z_{0} - z_{1}) leaves a remainder")]
    DivisionRemainder(usize, usize),
    #[error("polynomial is not symmetric under the triplet exchange")]
    NotSymmetric,
    #[error("bad serialized polynomial: {0}")]
    BadSerialization(String),
}

/// An anticommuting generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gen {
    Phi(usize),
    Theta(usize),
}

impl Gen {
    /// Canonical rank: sort by index, φ before θ at equal index.
    fn rank(self) -> usize {
        match self {
            Gen::Phi(i) => 2 * i,
            Gen::Theta(i) => 2 * i + 1,
        }
    }
}

/// A Grassmann monomial as a pair of bit masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GrassMono {
    pub phi: u32,
    pub theta: u32,
}

impl GrassMono {
    pub const EMPTY: GrassMono = GrassMono { phi: 0, theta: 0 };

    pub fn is_empty(&self) -> bool {
        self.phi == 0 && self.theta == 0
    }

    pub fn degree(&self) -> u32 {
        self.phi.count_ones() + self.theta.count_ones()
    }

    /// Generators in canonical order.
    pub fn gens(&self) -> Vec<Gen> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for i in 0..32 {
            if self.phi >> i & 1 == 1 {
                out.push(Gen::Phi(i));
            }
            if self.theta >> i & 1 == 1 {
                out.push(Gen::Theta(i));
            }
        }
        out.sort_by_key(|g| g.rank());
        out
    }

    /// Canonicalizes a generator sequence, returning the reordering sign,
    /// or `None` when a generator repeats (nilpotency).
    pub fn from_gens(gens: &[Gen]) -> Option<(i32, GrassMono)> {
        let mut sign = 1i32;
        let mut mono = GrassMono::EMPTY;
        for (i, g) in gens.iter().enumerate() {
            for h in &gens[..i] {
                match h.rank().cmp(&g.rank()) {
                    std::cmp::Ordering::Greater => sign = -sign,
                    std::cmp::Ordering::Equal => return None,
                    std::cmp::Ordering::Less => {}
                }
            }
            match *g {
                Gen::Phi(i) => mono.phi |= 1 << i,
                Gen::Theta(i) => mono.theta |= 1 << i,
            }
        }
        Some((sign, mono))
    }

    /// Product of two canonical monomials: `None` when masks overlap,
    /// otherwise the reordering sign and the canonical product.
    pub fn mul(&self, other: &GrassMono) -> Option<(i32, GrassMono)> {
        if self.phi & other.phi != 0 || self.theta & other.theta != 0 {
            return None;
        }
        // each generator of `other` crosses the generators of `self`
        // with strictly larger rank
        let a = self.gens();
        let mut sign = 1i32;
        for g in other.gens() {
            let r = g.rank();
            let crossings = a.iter().filter(|h| h.rank() > r).count();
            if crossings % 2 == 1 {
                sign = -sign;
            }
        }
        Some((
            sign,
            GrassMono {
                phi: self.phi | other.phi,
                theta: self.theta | other.theta,
            },
        ))
    }

    /// Relabels φ indices by `perm_phi` and θ indices by `perm_theta`,
    /// returning the re-canonicalization sign.
    pub fn permute(&self, perm_phi: &[usize], perm_theta: &[usize]) -> (i32, GrassMono) {
        let renamed: Vec<Gen> = self
            .gens()
            .into_iter()
            .map(|g| match g {
                Gen::Phi(i) => Gen::Phi(perm_phi[i]),
                Gen::Theta(i) => Gen::Theta(perm_theta[i]),
            })
            .collect();
        GrassMono::from_gens(&renamed).expect("permutation cannot collide")
    }

    /// (doublets, lone φ, lone θ) occupation counts.
    pub fn fermion_counts(&self) -> (usize, usize, usize) {
        let both = self.phi & self.theta;
        (
            both.count_ones() as usize,
            (self.phi & !both).count_ones() as usize,
            (self.theta & !both).count_ones() as usize,
        )
    }
}

/// A monomial of the superpolynomial ring: Grassmann factor times z^e.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperMono {
    pub g: GrassMono,
    pub z: Composition,
}

impl SuperMono {
    pub fn unit(n: usize) -> Self {
        SuperMono {
            g: GrassMono::EMPTY,
            z: vec![0; n],
        }
    }
}

/// A sparse superpolynomial: finite map from monomials to nonzero ℚ(α)
/// coefficients, all keys of the same arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPoly {
    n: usize,
    terms: BTreeMap<SuperMono, AlphaRat>,
}

impl SPoly {
    pub fn zero(n: usize) -> Self {
        SPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        SPoly::from_term(SuperMono::unit(n), AlphaRat::one())
    }

    pub fn from_term(m: SuperMono, c: AlphaRat) -> Self {
        let n = m.z.len();
        let mut p = SPoly::zero(n);
        p.add_term(m, c);
        p
    }

    /// The variable z_i.
    pub fn zvar(n: usize, i: usize) -> Self {
        let mut z = vec![0; n];
        z[i] = 1;
        SPoly::from_term(
            SuperMono {
                g: GrassMono::EMPTY,
                z,
            },
            AlphaRat::one(),
        )
    }

    /// The generator φ_i.
    pub fn phi(n: usize, i: usize) -> Self {
        SPoly::from_term(
            SuperMono {
                g: GrassMono {
                    phi: 1 << i,
                    theta: 0,
                },
                z: vec![0; n],
            },
            AlphaRat::one(),
        )
    }

    /// The generator θ_i.
    pub fn theta(n: usize, i: usize) -> Self {
        SPoly::from_term(
            SuperMono {
                g: GrassMono {
                    phi: 0,
                    theta: 1 << i,
                },
                z: vec![0; n],
            },
            AlphaRat::one(),
        )
    }

    /// Monomial z^e with no Grassmann content.
    pub fn zmono(e: Composition) -> Self {
        SPoly::from_term(
            SuperMono {
                g: GrassMono::EMPTY,
                z: e,
            },
            AlphaRat::one(),
        )
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMono, &AlphaRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &SuperMono) -> AlphaRat {
        self.terms.get(m).cloned().unwrap_or_else(AlphaRat::zero)
    }

    pub fn add_term(&mut self, m: SuperMono, c: AlphaRat) {
        debug_assert_eq!(m.z.len(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SPoly) {
        assert_eq!(self.n, other.n);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &SPoly) -> SPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &SPoly) -> SPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> SPoly {
        SPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &AlphaRat) -> SPoly {
        if c.is_zero() {
            return SPoly::zero(self.n);
        }
        SPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SPoly) -> SPoly {
        assert_eq!(self.n, other.n);
        let mut out = SPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((sign, g)) = ma.g.mul(&mb.g) {
                    let z: Composition = ma.z.iter().zip(&mb.z).map(|(a, b)| a + b).collect();
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -&c;
                    }
                    out.add_term(SuperMono { g, z }, c);
                }
            }
        }
        out
    }

    /// Applies 𝒦_ω: simultaneous relabeling of all three variable types
    /// by `perm` (i ↦ perm[i]).
    pub fn apply_perm(&self, perm: &[usize]) -> SPoly {
        self.map_monos(|m| {
            let (sign, g) = m.g.permute(perm, perm);
            let mut z = vec![0; self.n];
            for (i, &e) in m.z.iter().enumerate() {
                z[perm[i]] = e;
            }
            (sign, SuperMono { g, z })
        })
    }

    /// Applies K_ω: relabeling of the z variables only.
    pub fn apply_perm_z(&self, perm: &[usize]) -> SPoly {
        self.map_monos(|m| {
            let mut z = vec![0; self.n];
            for (i, &e) in m.z.iter().enumerate() {
                z[perm[i]] = e;
            }
            (1, SuperMono { g: m.g, z })
        })
    }

    fn map_monos(&self, f: impl Fn(&SuperMono) -> (i32, SuperMono)) -> SPoly {
        let mut out = SPoly::zero(self.n);
        for (m, c) in &self.terms {
            let (sign, m2) = f(m);
            out.add_term(m2, if sign < 0 { -c } else { c.clone() });
        }
        out
    }

    /// The exchange operators: K (z only), κ̃ (φ only), κ̂ (θ only), or
    /// the full triplet exchange 𝒦 = K κ̃ κ̂.
    pub fn exchange(&self, i: usize, j: usize, which: Exchange) -> Result<SPoly, RingError> {
        if i >= self.n || j >= self.n || i == j {
            return Err(RingError::IndexOutOfRange(i.max(j), self.n));
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.swap(i, j);
        let id: Vec<usize> = (0..self.n).collect();
        Ok(match which {
            Exchange::K => self.apply_perm_z(&perm),
            Exchange::KPhi => self.map_monos(|m| {
                let (sign, g) = m.g.permute(&perm, &id);
                (sign, SuperMono { g, z: m.z.clone() })
            }),
            Exchange::KTheta => self.map_monos(|m| {
                let (sign, g) = m.g.permute(&id, &perm);
                (sign, SuperMono { g, z: m.z.clone() })
            }),
            Exchange::Full => self.apply_perm(&perm),
        })
    }

    /// Σ_ω 𝒦_ω f over all of S_N (no normalization).
    ///
    /// Terms are grouped by Grassmann monomial so the reordering sign is
    /// computed once per (ω, monomial) pair.
    pub fn symmetrize_full(&self) -> SPoly {
        let mut groups: BTreeMap<GrassMono, Vec<(&Composition, &AlphaRat)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups.entry(m.g).or_default().push((&m.z, c));
        }
        let mut out = SPoly::zero(self.n);
        for perm in permutations(self.n) {
            for (g, terms) in &groups {
                let (sign, g2) = g.permute(&perm, &perm);
                for (z, c) in terms {
                    let mut z2 = vec![0; self.n];
                    for (i, &e) in z.iter().enumerate() {
                        z2[perm[i]] = e;
                    }
                    out.add_term(
                        SuperMono { g: g2, z: z2 },
                        if sign < 0 { -*c } else { (*c).clone() },
                    );
                }
            }
        }
        out
    }

    /// Σ_ω 𝒦_ω f over the minimal-length representatives of
    /// S_N / (S_{M₁} × S_{]M₁,M₂]} × S_{]M₂,M₃]} × S_{]M₃,N]}).
    pub fn symmetrize_coset(&self, sector: &Sector) -> SPoly {
        let mut out = SPoly::zero(self.n);
        for perm in coset_representatives(self.n, sector) {
            out.add_assign(&self.apply_perm(&perm));
        }
        out
    }

    /// True when 𝒦_{i,i+1} f = f for all adjacent pairs.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n.saturating_sub(1) {
            if &self.exchange(i, i + 1, Exchange::Full).unwrap() != self {
                return false;
            }
        }
        true
    }

    /// Extracts the z-polynomial coefficient of the Grassmann monomial
    /// `g` (the dagger contraction g†f).
    pub fn project_grassmann(&self, g: GrassMono) -> SPoly {
        let mut out = SPoly::zero(self.n);
        for (m, c) in &self.terms {
            if m.g == g {
                out.add_term(
                    SuperMono {
                        g: GrassMono::EMPTY,
                        z: m.z.clone(),
                    },
                    c.clone(),
                );
            }
        }
        out
    }

    /// Joint eigenvalues of the three fermion-number operators, or `None`
    /// when the polynomial mixes fermionic sectors.
    pub fn fermion_numbers(&self) -> Option<(usize, usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next().map(|m| m.g.fermion_counts())?;
        for m in it {
            if m.g.fermion_counts() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Total z-degree when homogeneous.
    pub fn z_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first: u32 = it.next().map(|m| m.z.iter().sum())?;
        for m in it {
            if m.z.iter().sum::<u32>() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Diagonal Grassmann pairing: Σ_g a_g(z)·b_g(z), a z-only result.
    /// Each canonical Grassmann monomial pairs with itself to 1.
    pub fn berezin_pair(&self, other: &SPoly) -> SPoly {
        assert_eq!(self.n, other.n);
        let mut groups: BTreeMap<GrassMono, Vec<(&SuperMono, &AlphaRat)>> = BTreeMap::new();
        for (m, c) in &other.terms {
            groups.entry(m.g).or_default().push((m, c));
        }
        let mut out = SPoly::zero(self.n);
        for (m, c) in &self.terms {
            if let Some(bs) = groups.get(&m.g) {
                for (mb, cb) in bs {
                    let z: Composition = m.z.iter().zip(&mb.z).map(|(a, b)| a + b).collect();
                    out.add_term(
                        SuperMono {
                            g: GrassMono::EMPTY,
                            z,
                        },
                        c * cb,
                    );
                }
            }
        }
        out
    }

    /// The Euler operator z_i ∂_i applied `power` times.
    pub fn z_euler(&self, i: usize, power: u32) -> SPoly {
        let mut out = SPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.z[i];
            if e == 0 && power > 0 {
                continue;
            }
            let mut factor = AlphaRat::one();
            for _ in 0..power {
                factor = &factor * &AlphaRat::from_int(e as i64);
            }
            out.add_term(m.clone(), &factor * c);
        }
        out
    }

    /// Exact division by (z_i − z_j); errors when a remainder survives.
    pub fn div_exact_zij(&self, i: usize, j: usize) -> Result<SPoly, RingError> {
        assert!(i != j && i < self.n && j < self.n);
        // synthetic division in z_i with coefficients in the other
        // variables: B_{d-1} = A_d + z_j·B_d, remainder A_0 + z_j·B_0
        let mut layers: Vec<BTreeMap<SuperMono, AlphaRat>> = Vec::new();
        for (m, c) in &self.terms {
            let d = m.z[i] as usize;
            if layers.len() <= d {
                layers.resize(d + 1, BTreeMap::new());
            }
            let mut stripped = m.clone();
            stripped.z[i] = 0;
            layers[d].insert(stripped, c.clone());
        }
        if layers.is_empty() {
            return Ok(SPoly::zero(self.n));
        }
        let top = layers.len() - 1;
        let mut quotient = SPoly::zero(self.n);
        let mut carry = SPoly::zero(self.n);
        for d in (1..=top).rev() {
            let mut level = SPoly {
                n: self.n,
                terms: layers[d].clone(),
            };
            level.add_assign(&carry);
            for (m, c) in &level.terms {
                let mut m2 = m.clone();
                m2.z[i] = (d - 1) as u32;
                quotient.add_term(m2, c.clone());
            }
            carry = SPoly::zero(self.n);
            for (m, c) in &level.terms {
                let mut m2 = m.clone();
                m2.z[j] += 1;
                carry.add_term(m2, c.clone());
            }
        }
        let mut rem = SPoly {
            n: self.n,
            terms: layers[0].clone(),
        };
        rem.add_assign(&carry);
        if !rem.is_zero() {
            return Err(RingError::DivisionRemainder(i, j));
        }
        Ok(quotient)
    }

    /// Requires the polynomial to be free of Grassmann generators.
    pub fn expect_z_only(&self) -> Result<(), RingError> {
        if self.terms.keys().any(|m| !m.g.is_empty()) {
            return Err(RingError::GrassmannContent);
        }
        Ok(())
    }

    /// Sets every z_i = 1 (sum of coefficients, Grassmann-free input).
    pub fn eval_all_ones(&self) -> Result<AlphaRat, RingError> {
        self.expect_z_only()?;
        let mut acc = AlphaRat::zero();
        for c in self.terms.values() {
            acc += c;
        }
        Ok(acc)
    }
}

/// Which exchange operator to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exchange {
    K,
    KPhi,
    KTheta,
    Full,
}

/// All permutations of {0..n}, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Minimal-length representatives of the fermionic coset space: the
/// permutations increasing within each of the four index blocks.
pub fn coset_representatives(n: usize, sector: &Sector) -> Vec<Vec<usize>> {
    let bounds = [0, sector.m1(), sector.m2(), sector.m3(), n];
    permutations(n)
        .into_iter()
        .filter(|p| {
            bounds
                .windows(2)
                .all(|w| p[w[0]..w[1]].windows(2).all(|x| x[0] < x[1]))
        })
        .collect()
}

impl fmt::Display for SPoly {
    /// One term per line in the deterministic order:
    /// `phi{1,2} theta{3} z^(1,0,2): coeff`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0");
        }
        for (m, c) in &self.terms {
            let list = |mask: u32| {
                (0..self.n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            if m.g.phi != 0 {
                write!(f, "phi{{{}}} ", list(m.g.phi))?;
            }
            if m.g.theta != 0 {
                write!(f, "theta{{{}}} ", list(m.g.theta))?;
            }
            let zs: Vec<String> = m.z.iter().map(|e| e.to_string()).collect();
            writeln!(f, "z^({}): {}", zs.join(","), c)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    phi: u32,
    theta: u32,
    z: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct SPolyRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = SPolyRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    phi: m.g.phi,
                    theta: m.g.theta,
                    z: m.z.clone(),
                    c: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SPolyRepr::deserialize(d)?;
        let mut out = SPoly::zero(repr.n);
        for t in repr.terms {
            if t.z.len() != repr.n {
                return Err(D::Error::custom("z-exponent length mismatch"));
            }
            let c = parse_alpha_rat(&t.c).map_err(|e| D::Error::custom(e.to_string()))?;
            out.add_term(
                SuperMono {
                    g: GrassMono {
                        phi: t.phi,
                        theta: t.theta,
                    },
                    z: t.z,
                },
                c,
            );
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mono_mul_examples() {
        let n = 2;
        // θ_1 · φ_1 = −φ_1θ_1
        let p = SPoly::theta(n, 0).mul(&SPoly::phi(n, 0));
        let expected = SPoly::from_term(
            SuperMono {
                g: GrassMono { phi: 1, theta: 1 },
                z: vec![0, 0],
            },
            -&AlphaRat::one(),
        );
        assert_eq!(p, expected);
        // nilpotency
        assert!(SPoly::phi(n, 0).mul(&SPoly::phi(n, 0)).is_zero());
        // φ_2 · (φ_1θ_1) = +φ_1θ_1φ_2 (two transpositions)
        let d = SPoly::phi(n, 0).mul(&SPoly::theta(n, 0));
        let p = SPoly::phi(n, 1).mul(&d);
        let expected = SPoly::from_term(
            SuperMono {
                g: GrassMono { phi: 3, theta: 1 },
                z: vec![0, 0],
            },
            AlphaRat::one(),
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn mono_mul_associative_with_signs() {
        let n = 3;
        let gens = [
            SPoly::phi(n, 0),
            SPoly::theta(n, 0),
            SPoly::phi(n, 1),
            SPoly::theta(n, 2),
            SPoly::phi(n, 2),
        ];
        for a in &gens {
            for b in &gens {
                for c in &gens {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    /// m_{(;1;1;)} = φ_1θ_2 z_1z_2 + φ_2θ_1 z_1z_2 for N=2.
    fn m_11(n: usize) -> SPoly {
        let z12 = SPoly::zvar(n, 0).mul(&SPoly::zvar(n, 1));
        let t1 = SPoly::phi(n, 0).mul(&SPoly::theta(n, 1)).mul(&z12);
        let t2 = SPoly::phi(n, 1).mul(&SPoly::theta(n, 0)).mul(&z12);
        t1.add(&t2)
    }

    #[test]
    fn full_exchange_fixes_mixed_monomial() {
        let m = m_11(2);
        assert_eq!(m.exchange(0, 1, Exchange::Full).unwrap(), m);
        assert!(m.is_symmetric());
        // 𝒦 factors as K·κ̃·κ̂
        let composed = m
            .exchange(0, 1, Exchange::K)
            .unwrap()
            .exchange(0, 1, Exchange::KPhi)
            .unwrap()
            .exchange(0, 1, Exchange::KTheta)
            .unwrap();
        assert_eq!(composed, m.exchange(0, 1, Exchange::Full).unwrap());
        // the Grassmann factor alone is not invariant
        assert_ne!(m.exchange(0, 1, Exchange::KPhi).unwrap(), m);
    }

    #[test]
    fn exchange_examples() {
        let z1 = SPoly::zvar(2, 0);
        assert_eq!(z1.exchange(0, 1, Exchange::K).unwrap(), SPoly::zvar(2, 1));
        // κ̃_12 on φ_1θ_1 → φ_2θ_1 (canonical θ_1φ_2 with one crossing)
        let d = SPoly::phi(2, 0).mul(&SPoly::theta(2, 0));
        let swapped = d.exchange(0, 1, Exchange::KPhi).unwrap();
        assert_eq!(swapped, SPoly::phi(2, 1).mul(&SPoly::theta(2, 0)));
        assert!(z1.exchange(0, 0, Exchange::K).is_err());
        assert!(z1.exchange(0, 5, Exchange::K).is_err());
    }

    #[test]
    fn symmetrize_basics() {
        let f = SPoly::zvar(2, 0);
        let s = f.symmetrize_full();
        assert_eq!(s, SPoly::zvar(2, 0).add(&SPoly::zvar(2, 1)));
        // double symmetrization rescales by N!
        let ss = s.symmetrize_full();
        assert_eq!(ss, s.scale(&AlphaRat::from_int(2)));
    }

    #[test]
    fn projector_example() {
        // f = Σ_{ω ∈ S_(M)} 𝒦_ω [φ;θ]_M (z_3−z_4) for M=(1,1,2), N=4;
        // the projector recovers the seed term exactly
        let n = 4;
        let sector = Sector::new(0, [1, 1, 2]);
        let prefix = SPoly::phi(n, 0)
            .mul(&SPoly::theta(n, 0))
            .mul(&SPoly::phi(n, 1))
            .mul(&SPoly::theta(n, 2))
            .mul(&SPoly::theta(n, 3));
        let seed = prefix.mul(&SPoly::zvar(n, 2).sub(&SPoly::zvar(n, 3)));
        let f = seed.symmetrize_coset(&sector);
        let g = GrassMono {
            phi: 0b0011,
            theta: 0b1101,
        };
        let projected = f.project_grassmann(g);
        assert_eq!(projected, SPoly::zvar(n, 2).sub(&SPoly::zvar(n, 3)));
        assert_eq!(prefix.mul(&projected), seed);
    }

    #[test]
    fn fermion_numbers_and_project_identity() {
        let n = 4;
        let m = SPoly::phi(n, 0)
            .mul(&SPoly::theta(n, 0))
            .mul(&SPoly::phi(n, 1))
            .mul(&SPoly::theta(n, 1))
            .mul(&SPoly::phi(n, 2))
            .mul(&SPoly::zvar(n, 2))
            .mul(&SPoly::zvar(n, 3));
        assert_eq!(m.fermion_numbers(), Some((2, 1, 0)));
        let mixed = m.add(&SPoly::phi(n, 0));
        assert_eq!(mixed.fermion_numbers(), None);
        // projecting a purely bosonic polynomial with M=(0,0,0) is the identity
        let b = SPoly::zvar(n, 0).mul(&SPoly::zvar(n, 1));
        assert_eq!(b.project_grassmann(GrassMono::EMPTY), b);
    }

    #[test]
    fn berezin_examples() {
        let n = 1;
        let d = SPoly::phi(n, 0).mul(&SPoly::theta(n, 0));
        assert_eq!(d.berezin_pair(&d), SPoly::one(n));
        assert!(SPoly::phi(n, 0).berezin_pair(&SPoly::theta(n, 0)).is_zero());
        let n = 2;
        let a = SPoly::phi(n, 0).mul(&SPoly::zvar(n, 0));
        let b = SPoly::phi(n, 0).mul(&SPoly::zvar(n, 1));
        assert_eq!(
            a.berezin_pair(&b),
            SPoly::zvar(n, 0).mul(&SPoly::zvar(n, 1))
        );
    }

    #[test]
    fn division_by_zij() {
        let n = 2;
        // (z_1² − z_2²)/(z_1 − z_2) = z_1 + z_2
        let f = SPoly::zmono(vec![2, 0]).sub(&SPoly::zmono(vec![0, 2]));
        let q = f.div_exact_zij(0, 1).unwrap();
        assert_eq!(q, SPoly::zvar(n, 0).add(&SPoly::zvar(n, 1)));
        assert!(SPoly::zvar(n, 0).div_exact_zij(0, 1).is_err());
    }

    #[test]
    fn serialization_round_trip_and_determinism() {
        let m = m_11(2);
        let s1 = serde_json::to_string(&m).unwrap();
        let s2 = serde_json::to_string(&m).unwrap();
        assert_eq!(s1, s2);
        let back: SPoly = serde_json::from_str(&s1).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn coset_representative_count() {
        // |S_(M)| = N!/(m̄̂! m̃! m̂! (N−M₃)!)
        let sector = Sector::new(0, [1, 1, 2]);
        assert_eq!(coset_representatives(4, &sector).len(), 12);
        let trivial = Sector::new(0, [0, 0, 0]);
        assert_eq!(coset_representatives(3, &trivial).len(), 1);
    }
}
