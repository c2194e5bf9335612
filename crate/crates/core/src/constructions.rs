//! Constructive results: parameter-level conversion, qubit-to-bit promotion,
//! juxtaposition with a classical code, assembly from a nested code pair,
//! zero-qubit padding and the nested-code extension.

use rand::Rng;

use crate::additive::AdditiveCode;
use crate::code::{symplectic_pairs, CodeParameters, CodeViolation, HybridCode};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliVector};

/// A binary linear code given by a generator matrix, one `u64` per row with
/// position 1 in bit 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<u64>,
}

impl BinaryCode {
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyQubits { n, max: 64 });
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if rows.iter().any(|r| r & !mask != 0) {
            return Err(Error::Precondition(format!("classical row exceeds length {n}")));
        }
        Ok(BinaryCode { n, rows })
    }

    /// Lines of `0`/`1` characters, all of equal length. `#` starts a
    /// comment. A header line `length n` declares the length, which a code
    /// with no rows needs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            if let Some(rest) = line.strip_prefix("length") {
                if n.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "length must precede all rows".into(),
                    });
                }
                let len = rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("bad length line '{line}'"),
                })?;
                n = Some(len);
                continue;
            }
            let bits: String = line.chars().filter(|c| !c.is_whitespace()).collect();
            if let Some(bad) = bits.chars().find(|&c| c != '0' && c != '1') {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("invalid symbol '{bad}' in classical row"),
                });
            }
            let len = *n.get_or_insert(bits.len());
            if bits.len() != len {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("row has length {}, expected {len}", bits.len()),
                });
            }
            if len > 64 {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("length {len} exceeds 64"),
                });
            }
            let word = bits
                .chars()
                .enumerate()
                .fold(0u64, |acc, (j, c)| acc | (((c == '1') as u64) << j));
            rows.push(word);
        }
        let n = n.ok_or(Error::Parse {
            line: 1,
            message: "empty classical code file".into(),
        })?;
        BinaryCode::new(n, rows)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if self.rows.is_empty() {
            out.push_str(&format!("length {}\n", self.n));
        }
        for r in &self.rows {
            out.extend((0..self.n).map(|j| if r >> j & 1 == 1 { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }

    /// `[n, 1, n]`.
    pub fn repetition(n: usize) -> Result<Self> {
        let word = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        BinaryCode::new(n, if n == 0 { vec![] } else { vec![word] })
    }

    /// `[n, n-1, 2]`, rows `e₁+e₂, e₂+e₃, …`.
    pub fn parity_check(n: usize) -> Result<Self> {
        BinaryCode::new(n, (0..n.saturating_sub(1)).map(|j| 0b11u64 << j).collect())
    }

    /// The length-`n` code with no codewords besides zero.
    pub fn empty(n: usize) -> Result<Self> {
        BinaryCode::new(n, vec![])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        let mut basis: Vec<u64> = Vec::new();
        for &r in &self.rows {
            let v = basis.iter().fold(r, |v, &b| v.min(v ^ b));
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        basis.len()
    }

    /// Minimum nonzero weight, `None` for the zero code. Enumerates all
    /// `2^rows` combinations.
    pub fn min_distance(&self) -> Option<usize> {
        let r = self.rows.len();
        assert!(r < 40, "classical code has too many rows to enumerate");
        let mut word = 0u64;
        let mut best: Option<usize> = None;
        for i in 1u64..(1u64 << r) {
            word ^= self.rows[i.trailing_zeros() as usize];
            if word != 0 {
                let w = word.count_ones() as usize;
                best = Some(best.map_or(w, |b| b.min(w)));
            }
        }
        best
    }

    fn x_row(&self, i: usize) -> PauliVector {
        PauliVector::from_masks(self.n, self.rows[i], 0).expect("row fits its length")
    }
}

/// Parameter-level conversion of an `(n, K·M, d)` code into a hybrid code
/// carrying a `K`-dimensional quantum and an `M`-ary classical part. For
/// `q = 2` both factors must be powers of two.
pub fn from_quantum_code(n: usize, dimension: u128, d: usize, split: (u128, u128)) -> Result<CodeParameters> {
    let (big_k, big_m) = split;
    if big_k.checked_mul(big_m) != Some(dimension) {
        return Err(Error::Arithmetic(format!(
            "{big_k}·{big_m} does not factor the dimension {dimension}"
        )));
    }
    if !big_k.is_power_of_two() || !big_m.is_power_of_two() {
        return Err(Error::Arithmetic(format!(
            "split ({big_k}, {big_m}) is not a pair of powers of two"
        )));
    }
    CodeParameters::new(
        n,
        big_k.trailing_zeros() as usize,
        big_m.trailing_zeros() as usize,
        d,
        2,
    )
}

/// Trades the last logical qubit for one classical bit: `Z̄ₖ` joins the
/// stabilizer and `X̄ₖ` becomes a translation.
pub fn qudit_to_classical(h: &HybridCode) -> Result<HybridCode> {
    let Some((&(x, z), rest)) = h.logicals().split_last() else {
        return Err(Error::Precondition("code has no logical qubit to convert".into()));
    };
    let mut stab = h.stabilizer().to_vec();
    stab.push(z);
    let mut trans = h.translations().to_vec();
    trans.push(x);
    Ok(HybridCode::new(h.n(), h.q(), stab, rest.to_vec(), trans)?.with_claimed_d(h.claimed_d()))
}

fn z_block(n: usize, offset: usize, count: usize) -> Result<Vec<PauliVector>> {
    (0..count)
        .map(|j| PauliVector::single(n, offset + j, Pauli::Z))
        .collect()
}

fn extend_all(rows: &[PauliVector], extra: usize) -> Result<Vec<PauliVector>> {
    rows.iter().map(|r| r.extend(extra)).collect()
}

fn extend_pairs(pairs: &[(PauliVector, PauliVector)], extra: usize) -> Result<Vec<(PauliVector, PauliVector)>> {
    pairs
        .iter()
        .map(|(x, z)| Ok((x.extend(extra)?, z.extend(extra)?)))
        .collect()
}

/// Appends `count` qubits fixed in `|0⟩`.
pub fn append_zero_qubits(h: &HybridCode, count: usize) -> Result<HybridCode> {
    let n = h.n() + count;
    let mut stab = extend_all(h.stabilizer(), count)?;
    stab.extend(z_block(n, h.n(), count)?);
    Ok(HybridCode::new(
        n,
        h.q(),
        stab,
        extend_pairs(h.logicals(), count)?,
        extend_all(h.translations(), count)?,
    )?
    .with_claimed_d(h.claimed_d()))
}

/// Places a stabilizer code and a classical code side by side. Classical
/// codewords become X-type translations on the appended block, whose qubits
/// are each stabilized by `Z`.
pub fn juxtapose(q: &HybridCode, classical: &BinaryCode) -> Result<HybridCode> {
    if q.m() != 0 {
        return Err(Error::Precondition(format!(
            "juxtaposition expects a code without translations, found m = {}",
            q.m()
        )));
    }
    let (n1, n2) = (q.n(), classical.n());
    let n = n1 + n2;
    let mut stab = extend_all(q.stabilizer(), n2)?;
    stab.extend(z_block(n, n1, n2)?);
    let trans = (0..classical.rows().len())
        .map(|i| PauliVector::identity(n1)?.concat(&classical.x_row(i)))
        .collect::<Result<Vec<_>>>()?;
    let code = HybridCode::new(n, q.q(), stab, extend_pairs(q.logicals(), n2)?, trans)?;
    code.validate()?;
    Ok(code)
}

/// Assembles a hybrid code from a self-orthogonal `c0` and translation
/// generators. Logical pairs are read off `c0* / c0` by symplectic
/// Gram–Schmidt in echelon order.
pub fn build_from_code_pair(c0: &AdditiveCode, extra: &[PauliVector]) -> Result<HybridCode> {
    if !c0.is_self_orthogonal() {
        return Err(Error::Precondition("C0 is not self-orthogonal".into()));
    }
    let n = c0.n();
    let c0_star = c0.symplectic_dual()?;
    let mut span = c0_star.clone();
    for (i, t) in extra.iter().enumerate() {
        if span.contains(t)? {
            return Err(CodeViolation::DependentTranslation { index: i }.into());
        }
        span = span.extended(std::slice::from_ref(t))?;
    }
    let logicals = symplectic_pairs(&c0_star.complement_basis(c0)?)?;
    let code = HybridCode::new(n, 2, c0.generators().to_vec(), logicals, extra.to_vec())?;
    code.validate()?;
    Ok(code)
}

/// Inputs of the nested-code extension: an `[[n, k₁, d₁]]` code, `k₂−k₁`
/// rows extending its normalizer to that of an `[[n, k₂, d₂]]` code, and a
/// classical `[n₃, r, d₃]` code with `r ≤ k₂−k₁`.
#[derive(Debug, Clone)]
pub struct ConstructionXInput {
    pub inner: HybridCode,
    pub g12: Vec<PauliVector>,
    pub classical: BinaryCode,
    /// `(d₁, d₂, d₃)` if known.
    pub claimed: Option<(usize, usize, usize)>,
}

impl ConstructionXInput {
    /// Derives `g12` from nested codes `inner ⊂ outer` (as code spaces, so the
    /// normalizer of `inner` lies inside that of `outer`).
    pub fn from_nested(inner: &HybridCode, outer: &HybridCode, classical: BinaryCode) -> Result<Self> {
        if inner.n() != outer.n() {
            return Err(Error::Precondition(format!(
                "nested codes must have equal length, found {} and {}",
                inner.n(),
                outer.n()
            )));
        }
        if inner.m() != 0 || outer.m() != 0 {
            return Err(Error::Precondition("nested codes must not carry translations".into()));
        }
        let n1 = inner.validate()?.c0_star;
        let n2 = outer.validate()?.c0_star;
        if !n1.is_subcode_of(&n2)? {
            return Err(Error::Precondition(
                "the inner normalizer is not contained in the outer normalizer".into(),
            ));
        }
        let g12 = n2.complement_basis(&n1)?;
        let claimed = match (inner.claimed_d(), outer.claimed_d(), classical.min_distance()) {
            (Some(d1), Some(d2), Some(d3)) => Some((d1, d2, d3)),
            _ => None,
        };
        Ok(ConstructionXInput {
            inner: inner.clone(),
            g12,
            classical,
            claimed,
        })
    }

    pub fn check(&self) -> Result<()> {
        let inner = &self.inner;
        if inner.m() != 0 {
            return Err(Error::Precondition("inner code must not carry translations".into()));
        }
        let normalizer = inner.validate()?.c0_star;
        let mut span = normalizer.clone();
        for (i, g) in self.g12.iter().enumerate() {
            if g.n() != inner.n() {
                return Err(Error::Dimension {
                    expected: inner.n(),
                    found: g.n(),
                });
            }
            if span.contains(g)? {
                return Err(CodeViolation::DependentTranslation { index: i }.into());
            }
            span = span.extended(std::slice::from_ref(g))?;
        }
        let rows = self.classical.rows().len();
        if rows > self.g12.len() || self.classical.rank() != rows {
            return Err(Error::Precondition(format!(
                "classical code needs full rank with at most {} rows, found {} rows of rank {}",
                self.g12.len(),
                rows,
                self.classical.rank()
            )));
        }
        Ok(())
    }

    /// `min(d₁, d₂ + d₃)` from the claimed distances.
    pub fn distance_bound(&self) -> Option<usize> {
        self.claimed.map(|(d1, d2, d3)| d1.min(d2 + d3))
    }
}

/// Builds `[[n+n₃, k₁ : r, d ≥ min(d₁, d₂+d₃)]]` where `r` is the number of
/// classical rows. The appended block is stabilized by single-qubit `Z`;
/// translation `i` is `g12[i]` followed by classical row `i` as an X-type
/// Pauli. With `r < k₂−k₁` only the leading `g12` rows are used, which
/// amounts to an intermediate outer code of distance at least `d₂`.
pub fn construction_x(input: &ConstructionXInput) -> Result<HybridCode> {
    input.check()?;
    let inner = &input.inner;
    let (n1, n3) = (inner.n(), input.classical.n());
    let n = n1 + n3;
    let mut stab = extend_all(inner.stabilizer(), n3)?;
    stab.extend(z_block(n, n1, n3)?);
    let trans = input
        .g12
        .iter()
        .take(input.classical.rows().len())
        .enumerate()
        .map(|(i, g)| g.concat(&input.classical.x_row(i)))
        .collect::<Result<Vec<_>>>()?;
    let code = HybridCode::new(n, 2, stab, extend_pairs(inner.logicals(), n3)?, trans)?
        .with_claimed_d(input.distance_bound());
    code.validate()?;
    Ok(code)
}

/// A uniformly random symplectic basis `(x₁, z₁), …, (xₙ, zₙ)`.
pub fn random_symplectic_basis<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Vec<(PauliVector, PauliVector)>> {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut pairs: Vec<(PauliVector, PauliVector)> = Vec::with_capacity(n);
    let draw = |pairs: &[(PauliVector, PauliVector)], rng: &mut R| -> Result<PauliVector> {
        let mut v = PauliVector::from_masks(n, rng.gen::<u64>() & mask, rng.gen::<u64>() & mask)?;
        for (a, b) in pairs {
            let (ca, cb) = (v.anticommutes(a), v.anticommutes(b));
            if cb {
                v = v.mul(a);
            }
            if ca {
                v = v.mul(b);
            }
        }
        Ok(v)
    };
    while pairs.len() < n {
        let a = draw(&pairs, rng)?;
        if a.is_identity() {
            continue;
        }
        let b = loop {
            let b = draw(&pairs, rng)?;
            if b.anticommutes(&a) {
                break b;
            }
        };
        pairs.push((a, b));
    }
    Ok(pairs)
}

/// A random valid `[[n, k:m]]` code built from a random symplectic basis.
pub fn random_code<R: Rng + ?Sized>(n: usize, k: usize, m: usize, rng: &mut R) -> Result<HybridCode> {
    if k + m > n {
        return Err(Error::Precondition(format!("k + m = {} exceeds n = {n}", k + m)));
    }
    let basis = random_symplectic_basis(n, rng)?;
    let r = n - k;
    HybridCode::new(
        n,
        2,
        basis[..r].iter().map(|p| p.1).collect(),
        basis[r..].to_vec(),
        basis[..m].iter().map(|p| p.0).collect(),
    )
}

/// Random nested stabilizer codes `[[n, k₁]] ⊂ [[n, k₂]]` sharing a symplectic
/// basis.
pub fn random_nested_pair<R: Rng + ?Sized>(
    n: usize,
    k1: usize,
    k2: usize,
    rng: &mut R,
) -> Result<(HybridCode, HybridCode)> {
    if k1 > k2 || k2 > n {
        return Err(Error::Precondition(format!("need k1 ≤ k2 ≤ n, found {k1}, {k2}, {n}")));
    }
    let basis = random_symplectic_basis(n, rng)?;
    let code = |k: usize| {
        HybridCode::new(
            n,
            2,
            basis[..n - k].iter().map(|p| p.1).collect(),
            basis[n - k..].to_vec(),
            vec![],
        )
    };
    Ok((code(k1)?, code(k2)?))
}

/// A random full-rank `[n, k]` binary code.
pub fn random_binary_code<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<BinaryCode> {
    if k > n {
        return Err(Error::Precondition(format!("dimension {k} exceeds length {n}")));
    }
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    loop {
        let rows: Vec<u64> = (0..k).map(|_| rng.gen::<u64>() & mask).collect();
        let code = BinaryCode::new(n, rows)?;
        if code.rank() == k {
            return Ok(code);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::hybrid_distance_full;
    use crate::catalog;
    use crate::par::Execution;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const FIVE: &str = "5 1 0 2 3\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n---\nXXXXX\nZZZZZ\n===\n";

    fn distance(h: &HybridCode) -> usize {
        hybrid_distance_full(&h.validate().unwrap(), 24, Execution::default()).unwrap()
    }

    #[test]
    fn parameter_conversion() {
        let p = from_quantum_code(8, 8, 3, (4, 2)).unwrap();
        assert_eq!((p.n, p.k, p.m, p.d), (8, 2, 1, 3));
        let p = from_quantum_code(9, 16, 3, (4, 4)).unwrap();
        assert_eq!((p.k, p.m), (2, 2));
        let p = from_quantum_code(5, 2, 3, (2, 1)).unwrap();
        assert_eq!((p.k, p.m), (1, 0));
        assert!(matches!(from_quantum_code(8, 8, 3, (4, 4)), Err(Error::Arithmetic(_))));
        assert!(matches!(from_quantum_code(8, 12, 3, (3, 4)), Err(Error::Arithmetic(_))));
    }

    #[test]
    fn conversion_keeps_distance() {
        let h = catalog::code("9_2_2_3").unwrap();
        let c = qudit_to_classical(&h).unwrap();
        assert_eq!((c.n(), c.k(), c.m()), (9, 1, 3));
        assert_eq!(distance(&c), 3);
        let z = qudit_to_classical(&c).unwrap();
        assert_eq!((z.k(), z.m()), (0, 4));
        assert!(distance(&z) >= 3);
        assert!(matches!(qudit_to_classical(&z), Err(Error::Precondition(_))));
    }

    #[test]
    fn conversion_chain() {
        for (_, h) in catalog::all().into_iter().filter(|(_, h)| h.k() >= 1) {
            let before = h.validate().unwrap();
            let after = qudit_to_classical(&h).unwrap().validate().unwrap();
            assert_eq!(after.c, before.c);
            assert_eq!(after.c_star, before.c_star);
            assert!(before.c0.is_subcode_of(&after.c0).unwrap());
            assert!(after.c0_star.is_subcode_of(&before.c0_star).unwrap());
            assert_eq!(after.c0.rank(), before.c0.rank() + 1);
        }
    }

    #[test]
    fn juxtaposition() {
        let five = HybridCode::parse(FIVE).unwrap();
        let j = juxtapose(&five, &BinaryCode::repetition(3).unwrap()).unwrap();
        assert_eq!((j.n(), j.k(), j.m()), (8, 1, 1));
        assert_eq!(distance(&j), 3);
        let j = juxtapose(&five, &BinaryCode::repetition(4).unwrap()).unwrap();
        assert_eq!((j.n(), j.k(), j.m()), (9, 1, 1));
        let padded = juxtapose(&five, &BinaryCode::empty(2).unwrap()).unwrap();
        assert_eq!(padded, append_zero_qubits(&five, 2).unwrap().with_claimed_d(None));
        let hybrid = catalog::code("7_1_1_3").unwrap();
        assert!(juxtapose(&hybrid, &BinaryCode::repetition(2).unwrap()).is_err());
    }

    #[test]
    fn appending_reproduces_catalog_stabilizer() {
        let h11 = catalog::code("11_1_2_4").unwrap();
        let h13 = catalog::code("13_1_4_4").unwrap();
        let padded = append_zero_qubits(&h11, 2).unwrap();
        assert_eq!(padded.stabilizer(), h13.stabilizer());
        assert_eq!(append_zero_qubits(&h11, 0).unwrap(), h11);
        let h7 = catalog::code("7_1_1_3").unwrap();
        assert_eq!(distance(&append_zero_qubits(&h7, 3).unwrap()), 3);
    }

    #[test]
    fn code_pair_assembly() {
        let p = catalog::printed("7_1_1_3").unwrap();
        let stab: Vec<PauliVector> = p.stabilizer.iter().map(|s| s.parse().unwrap()).collect();
        let t: PauliVector = p.translations[0].parse().unwrap();
        let c0 = AdditiveCode::from_generators(7, &stab).unwrap();
        let h = build_from_code_pair(&c0, &[t]).unwrap();
        assert_eq!((h.n(), h.k(), h.m()), (7, 1, 1));
        assert_eq!(distance(&h), 3);
        assert_eq!(build_from_code_pair(&c0, &[]).unwrap().m(), 0);
        let inside = h.logicals()[0].0;
        assert!(matches!(
            build_from_code_pair(&c0, &[inside]),
            Err(Error::InvalidCode(CodeViolation::DependentTranslation { index: 0 }))
        ));
        let bad = AdditiveCode::from_generators(1, &["X".parse().unwrap(), "Z".parse().unwrap()]).unwrap();
        assert!(matches!(build_from_code_pair(&bad, &[]), Err(Error::Precondition(_))));
    }

    #[test]
    fn code_pair_assembly_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let k = rng.gen_range(0..=n);
            let m = rng.gen_range(0..=n - k);
            let h = random_code(n, k, m, &mut rng).unwrap();
            let d = h.validate().unwrap();
            let rebuilt = build_from_code_pair(&d.c0, h.translations()).unwrap();
            assert_eq!(rebuilt.validate().unwrap().ranks(), (n - k - m, n - k, n + k, n + k + m));
            assert_eq!(rebuilt.validate().unwrap().c_star, d.c_star);
        }
    }

    #[test]
    fn nested_extension_trivial_cases() {
        let five = HybridCode::parse(FIVE).unwrap();
        let input = ConstructionXInput {
            inner: five.clone(),
            g12: vec![],
            classical: BinaryCode::empty(0).unwrap(),
            claimed: None,
        };
        assert_eq!(construction_x(&input).unwrap(), five.with_claimed_d(None));
    }

    #[test]
    fn nested_extension_meets_bound() {
        use crate::analysis::verify_distance_sweep;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(2..=6);
            let k2 = rng.gen_range(1..=n);
            let k1 = rng.gen_range(0..k2);
            let (inner, outer) = random_nested_pair(n, k1, k2, &mut rng).unwrap();
            let n3 = rng.gen_range(k2 - k1..=k2 - k1 + 2);
            let classical = random_binary_code(n3, k2 - k1, &mut rng).unwrap();
            let d1 = distance(&inner);
            let d2 = distance(&outer);
            let d3 = classical.min_distance().unwrap();
            let input = ConstructionXInput::from_nested(
                &inner.with_claimed_d(Some(d1)),
                &outer.with_claimed_d(Some(d2)),
                classical,
            )
            .unwrap();
            let out = construction_x(&input).unwrap();
            assert_eq!((out.n(), out.k(), out.m()), (n + n3, k1, k2 - k1));
            let target = d1.min(d2 + d3);
            let derived = out.validate().unwrap();
            let sweep = verify_distance_sweep(&derived, target, u128::MAX, Execution::default()).unwrap();
            assert!(sweep.passed, "{out}");
            assert!(distance(&out) >= target);
        }
    }

    #[test]
    fn nested_extension_rejects_bad_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (inner, outer) = random_nested_pair(5, 1, 3, &mut rng).unwrap();
        let wide = BinaryCode::parity_check(4).unwrap();
        let input = ConstructionXInput::from_nested(&inner, &outer, wide).unwrap();
        assert!(construction_x(&input).is_err());
        let dependent = BinaryCode::new(3, vec![0b011, 0b011]).unwrap();
        let input = ConstructionXInput::from_nested(&inner, &outer, dependent).unwrap();
        assert!(construction_x(&input).is_err());
        let narrow = BinaryCode::repetition(3).unwrap();
        let input = ConstructionXInput::from_nested(&inner, &outer, narrow).unwrap();
        let out = construction_x(&input).unwrap();
        assert_eq!((out.n(), out.k(), out.m()), (8, 1, 1));
        assert!(ConstructionXInput::from_nested(&outer, &inner, BinaryCode::empty(0).unwrap()).is_err());
        let (other, _) = random_nested_pair(6, 1, 3, &mut rng).unwrap();
        assert!(ConstructionXInput::from_nested(&inner, &other, BinaryCode::empty(0).unwrap()).is_err());
    }

    #[test]
    fn binary_code_text_round_trip() {
        let c = BinaryCode::parse("# [3,2,2]\n110\n011\n").unwrap();
        assert_eq!(c, BinaryCode::parity_check(3).unwrap());
        assert_eq!(c.min_distance(), Some(2));
        assert_eq!(BinaryCode::parse(&c.serialize()).unwrap(), c);
        let e = BinaryCode::parse("length 4\n").unwrap();
        assert_eq!((e.n(), e.rank(), e.min_distance()), (4, 0, None));
        assert_eq!(BinaryCode::parse(&e.serialize()).unwrap(), e);
        assert_eq!(BinaryCode::parse("length 1\n1\n").unwrap(), BinaryCode::repetition(1).unwrap());
        assert!(BinaryCode::parse("1\nlength 1\n").is_err());
        assert!(matches!(BinaryCode::parse("110\n01\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(BinaryCode::parse("1a0\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(BinaryCode::repetition(4).unwrap().min_distance(), Some(4));
    }
}
