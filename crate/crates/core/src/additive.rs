//! Additive (GF(2)-linear) codes of Pauli vectors.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::gf2::{self, Echelon};
use crate::pauli::{check_same_n, PauliVector, MAX_QUBITS};

/// Default cap on the rank of a code whose span may be enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 30;

/// Additive code given by a canonical row-reduced generator list.
///
/// Pivots follow the interleaved order x₁, z₁, x₂, z₂, …, so two codes are
/// equal exactly when their generator lists are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdditiveCode {
    n: usize,
    generators: Vec<PauliVector>,
}

impl std::fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AdditiveCode")
            .field("n", &self.n)
            .field("rank", &self.rank())
            .field(
                "generators",
                &self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[inline]
fn swap_pairs(key: u128) -> u128 {
    const HI: u128 = 0xAAAA_AAAA_AAAA_AAAA_AAAA_AAAA_AAAA_AAAA;
    const LO: u128 = 0x5555_5555_5555_5555_5555_5555_5555_5555;
    ((key & HI) >> 1) | ((key & LO) << 1)
}

#[inline]
fn column_mask(n: usize) -> u128 {
    if n == 0 {
        0
    } else {
        !0u128 << (128 - 2 * n)
    }
}

impl AdditiveCode {
    /// The zero code `{I}` on `n` qubits.
    pub fn zero(n: usize) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
        }
        Ok(AdditiveCode {
            n,
            generators: Vec::new(),
        })
    }

    /// The whole Pauli space on `n` qubits (rank 2n).
    pub fn full(n: usize) -> Result<Self> {
        AdditiveCode::zero(n)?.symplectic_dual()
    }

    /// Row-reduces `gens` into canonical form. An empty list gives the zero code.
    pub fn from_generators(n: usize, gens: &[PauliVector]) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
        }
        for g in gens {
            if g.n() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: g.n(),
                });
            }
        }
        Ok(Self::from_keys(n, gens.iter().map(|g| g.key())))
    }

    fn from_keys(n: usize, keys: impl IntoIterator<Item = u128>) -> Self {
        let generators = gf2::rref(keys)
            .into_iter()
            .map(|k| PauliVector::from_key(n, k))
            .collect();
        AdditiveCode { n, generators }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliVector] {
        &self.generators
    }

    /// Number of codewords, `2^rank`.
    pub fn size(&self) -> u128 {
        1u128 << self.rank()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for g in &self.generators {
            e.insert(g.key());
        }
        e
    }

    /// Membership in the GF(2) span of the generators.
    pub fn contains(&self, v: &PauliVector) -> Result<bool> {
        if v.n() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: v.n(),
            });
        }
        Ok(self.echelon().reduce(v.key()) == 0)
    }

    /// Canonical representative of the coset `v + self`.
    pub fn coset_representative(&self, v: &PauliVector) -> Result<PauliVector> {
        if v.n() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: v.n(),
            });
        }
        Ok(PauliVector::from_key(self.n, self.echelon().reduce(v.key())))
    }

    /// `{v : v commutes with every codeword}`; rank is `2n - rank`.
    pub fn symplectic_dual(&self) -> Result<AdditiveCode> {
        let rows: Vec<u128> = self.generators.iter().map(|g| swap_pairs(g.key())).collect();
        let basis = gf2::nullspace(&rows, column_mask(self.n));
        Ok(Self::from_keys(self.n, basis))
    }

    /// Every pair of codewords commutes (C ⊆ C*).
    pub fn is_self_orthogonal(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| !a.anticommutes(b)))
    }

    pub fn is_subcode_of(&self, other: &AdditiveCode) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: other.n,
                found: self.n,
            });
        }
        let e = other.echelon();
        Ok(self.generators.iter().all(|g| e.reduce(g.key()) == 0))
    }

    /// Span of `self` together with `extra`.
    pub fn extended(&self, extra: &[PauliVector]) -> Result<AdditiveCode> {
        for v in extra {
            if v.n() != self.n {
                return Err(Error::Dimension {
                    expected: self.n,
                    found: v.n(),
                });
            }
        }
        Ok(Self::from_keys(
            self.n,
            self.generators.iter().chain(extra).map(|g| g.key()),
        ))
    }

    /// Codewords commuting with every vector in `with`.
    pub fn commutant_within(&self, with: &[PauliVector]) -> Result<AdditiveCode> {
        let outside = AdditiveCode::from_generators(self.n, with)?.symplectic_dual()?;
        self.intersection(&outside)
    }

    /// Intersection of two codes on the same length.
    pub fn intersection(&self, other: &AdditiveCode) -> Result<AdditiveCode> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        // A ∩ B = (A* + B*)*
        let a = self.symplectic_dual()?;
        let b = other.symplectic_dual()?;
        a.extended(b.generators())?.symplectic_dual()
    }

    /// Vectors of `self` that extend a basis of `sub` to a basis of `self`.
    /// `sub` must be a subcode.
    pub fn complement_basis(&self, sub: &AdditiveCode) -> Result<Vec<PauliVector>> {
        if !sub.is_subcode_of(self)? {
            return Err(Error::Precondition("complement of a non-subcode".into()));
        }
        let mut e = sub.echelon();
        Ok(self
            .generators
            .iter()
            .copied()
            .filter(|g| e.insert(g.key()))
            .collect())
    }

    /// Iterator over all `2^rank` codewords, refusing ranks above `cap`.
    pub fn enumerate_span(&self, cap: usize) -> Result<SpanIter<'_>> {
        self.check_cap(cap)?;
        Ok(SpanIter::new(self.n, &self.generators, 0..1u64 << self.rank()))
    }

    pub(crate) fn check_cap(&self, cap: usize) -> Result<()> {
        if self.rank() > cap.min(63) {
            return Err(Error::Capacity {
                what: "span enumeration rank",
                size: self.rank() as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }

    /// Codewords whose Gray-code index lies in `range`; ranges partition the
    /// span for parallel consumers.
    pub fn span_range(&self, range: Range<u64>) -> SpanIter<'_> {
        SpanIter::new(self.n, &self.generators, range)
    }
}

/// Gray-code walk over `Σ cᵢ gᵢ`: step `i` flips the generator at the lowest
/// set bit of `i`, so each word costs one XOR.
#[derive(Debug, Clone)]
pub struct SpanIter<'a> {
    gens: &'a [PauliVector],
    index: u64,
    end: u64,
    x: u64,
    z: u64,
    n: usize,
}

/// Gray code of `i`.
#[inline]
pub fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Combination of `gens` selected by the bits of `coeffs`.
pub fn combine(n: usize, gens: &[PauliVector], coeffs: u64) -> PauliVector {
    let mut x = 0;
    let mut z = 0;
    let mut c = coeffs;
    while c != 0 {
        let j = c.trailing_zeros() as usize;
        x ^= gens[j].x_mask();
        z ^= gens[j].z_mask();
        c &= c - 1;
    }
    PauliVector::from_masks_unchecked(n, x, z)
}

impl<'a> SpanIter<'a> {
    pub(crate) fn new(n: usize, gens: &'a [PauliVector], range: Range<u64>) -> Self {
        let start = combine(n, gens, gray(range.start));
        SpanIter {
            gens,
            index: range.start,
            end: range.end,
            x: start.x_mask(),
            z: start.z_mask(),
            n,
        }
    }

    /// Gray index of the word the next call to `next` will return.
    pub fn gray_index(&self) -> u64 {
        gray(self.index)
    }
}

impl Iterator for SpanIter<'_> {
    type Item = PauliVector;

    #[inline]
    fn next(&mut self) -> Option<PauliVector> {
        if self.index >= self.end {
            return None;
        }
        let out = PauliVector::from_masks_unchecked(self.n, self.x, self.z);
        self.index += 1;
        if self.index < self.end {
            let j = self.index.trailing_zeros() as usize;
            self.x ^= self.gens[j].x_mask();
            self.z ^= self.gens[j].z_mask();
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.index) as usize;
        (left, Some(left))
    }
}

/// Symplectic product of two vectors; errors on length mismatch.
pub fn symplectic_product(a: &PauliVector, b: &PauliVector) -> Result<u8> {
    check_same_n(a, b)?;
    Ok(a.anticommutes(b) as u8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> PauliVector {
        s.parse().unwrap()
    }

    const STAB_7: [&str; 6] = [
        "XIIZYYZ", "ZIIIIIX", "IXIXZII", "IZIZIXX", "IIXXIZI", "IIZZXIX",
    ];

    fn stab7() -> AdditiveCode {
        let gens: Vec<_> = STAB_7.iter().map(|s| p(s)).collect();
        AdditiveCode::from_generators(7, &gens).unwrap()
    }

    fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> PauliVector {
        let m = crate::pauli::mask_for(n);
        PauliVector::from_masks(n, rng.gen::<u64>() & m, rng.gen::<u64>() & m).unwrap()
    }

    /// Plain Gaussian elimination on (x|z) bit rows, written independently of
    /// the interleaved echelon code.
    fn naive_rank(n: usize, vs: &[PauliVector]) -> usize {
        let mut rows: Vec<Vec<u8>> = vs
            .iter()
            .map(|v| {
                (0..n)
                    .map(|i| (v.x_mask() >> i & 1) as u8)
                    .chain((0..n).map(|i| (v.z_mask() >> i & 1) as u8))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..2 * n {
            if let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] == 1) {
                rows.swap(rank, piv);
                for r in 0..rows.len() {
                    if r != rank && rows[r][col] == 1 {
                        for c in 0..2 * n {
                            rows[r][c] ^= rows[rank][c];
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn duplicate_generator_has_rank_one() {
        let g = p("XZY");
        assert_eq!(AdditiveCode::from_generators(3, &[g, g]).unwrap().rank(), 1);
    }

    #[test]
    fn empty_input_is_zero_code() {
        let c = AdditiveCode::from_generators(4, &[]).unwrap();
        assert_eq!(c.rank(), 0);
        assert_eq!(c.symplectic_dual().unwrap().rank(), 8);
    }

    #[test]
    fn printed_stabilizer_has_rank_six() {
        assert_eq!(stab7().rank(), 6);
    }

    #[test]
    fn rank_matches_naive_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let vs: Vec<_> = (0..5).map(|_| random_vec(&mut rng, 4)).collect();
            let c = AdditiveCode::from_generators(4, &vs).unwrap();
            assert_eq!(c.rank(), naive_rank(4, &vs));
        }
    }

    #[test]
    fn rref_is_idempotent() {
        let c = stab7();
        let again = AdditiveCode::from_generators(7, c.generators()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn dual_of_stabilizer_contains_it() {
        let c = stab7();
        let dual = c.symplectic_dual().unwrap();
        assert_eq!(dual.rank(), 8);
        assert!(c.is_subcode_of(&dual).unwrap());
        for g in dual.generators() {
            for h in c.generators() {
                assert!(!g.anticommutes(h));
            }
        }
    }

    #[test]
    fn double_dual_of_random_self_orthogonal_code() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            // build a random self-orthogonal code greedily
            let mut gens: Vec<PauliVector> = Vec::new();
            for _ in 0..rng.gen_range(0..6) {
                let v = random_vec(&mut rng, 5);
                if gens.iter().all(|g| !g.anticommutes(&v)) && !v.anticommutes(&v) {
                    gens.push(v);
                }
            }
            let c = AdditiveCode::from_generators(5, &gens).unwrap();
            assert!(c.is_self_orthogonal());
            let dd = c.symplectic_dual().unwrap().symplectic_dual().unwrap();
            assert_eq!(dd, c);
            assert_eq!(c.rank() + c.symplectic_dual().unwrap().rank(), 10);
        }
    }

    #[test]
    fn contains_identity_and_printed_rows() {
        let c = stab7();
        assert!(c.contains(&PauliVector::identity(7).unwrap()).unwrap());
        assert!(c.contains(&p("ZIIIIIX")).unwrap());
        assert!(!c.contains(&p("IIIIXYY")).unwrap());
        // exhaustive confirmation
        assert!(c.enumerate_span(30).unwrap().all(|v| v != p("IIIIXYY")));
        assert!(c.contains(&p("XX")).is_err());
    }

    #[test]
    fn span_of_printed_stabilizer_has_expected_histogram() {
        let mut hist = [0u32; 8];
        for v in stab7().enumerate_span(30).unwrap() {
            hist[v.weight()] += 1;
        }
        assert_eq!(hist, [1, 0, 1, 2, 7, 24, 23, 6]);
    }

    #[test]
    fn rank_zero_span_is_identity_only() {
        let c = AdditiveCode::zero(3).unwrap();
        let all: Vec<_> = c.enumerate_span(30).unwrap().collect();
        assert_eq!(all, vec![PauliVector::identity(3).unwrap()]);
    }

    #[test]
    fn rank_ten_span_is_closed_and_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut gens = Vec::new();
        let mut c = AdditiveCode::zero(8).unwrap();
        while c.rank() < 10 {
            gens.push(random_vec(&mut rng, 8));
            c = AdditiveCode::from_generators(8, &gens).unwrap();
        }
        let words: Vec<_> = c.enumerate_span(30).unwrap().collect();
        assert_eq!(words.len(), 1024);
        let set: std::collections::HashSet<_> = words.iter().copied().collect();
        assert_eq!(set.len(), 1024);
        for _ in 0..100 {
            let a = words[rng.gen_range(0..1024)];
            let b = words[rng.gen_range(0..1024)];
            assert!(set.contains(&a.mul(&b)));
        }
    }

    #[test]
    fn span_ranges_partition_the_span() {
        let c = stab7();
        let whole: Vec<_> = c.enumerate_span(30).unwrap().collect();
        let pieces: Vec<_> = [0..10, 10..33, 33..64]
            .into_iter()
            .flat_map(|r| c.span_range(r).collect::<Vec<_>>())
            .collect();
        assert_eq!(whole, pieces);
    }

    #[test]
    fn capacity_error_reports_rank() {
        let c = stab7();
        match c.enumerate_span(5) {
            Err(Error::Capacity { size, cap, .. }) => {
                assert_eq!(size, 6);
                assert_eq!(cap, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn contains_agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let gens: Vec<_> = (0..rng.gen_range(0..8)).map(|_| random_vec(&mut rng, 4)).collect();
            let c = AdditiveCode::from_generators(4, &gens).unwrap();
            let members: std::collections::HashSet<_> = c.enumerate_span(30).unwrap().collect();
            for x in 0..16u64 {
                for z in 0..16u64 {
                    let v = PauliVector::from_masks(4, x, z).unwrap();
                    assert_eq!(c.contains(&v).unwrap(), members.contains(&v));
                }
            }
        }
    }

    #[test]
    fn intersection_and_complement() {
        let c = stab7();
        let dual = c.symplectic_dual().unwrap();
        assert_eq!(c.intersection(&dual).unwrap(), c);
        let comp = dual.complement_basis(&c).unwrap();
        assert_eq!(comp.len(), 2);
        assert_eq!(c.extended(&comp).unwrap(), dual);
    }
}
