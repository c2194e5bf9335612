//! Hybrid stabilizer codes `[[n, k:m, d]]` and their nested classical codes.
//!
//! A [`HybridCode`] is stored the way codes are usually printed: stabilizer
//! rows, then `k` logical pairs, then `m` translation generators. Validation
//! produces the chain `C ≤ C₀ ≤ C₀* ≤ C*` as [`DerivedCodes`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::additive::AdditiveCode;
use crate::error::{Error, Result};
use crate::gf2::Echelon;
use crate::pauli::{PauliVector, MAX_QUBITS};

/// `[[n, k:m, d]]_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub d: usize,
    pub q: u32,
}

impl CodeParameters {
    pub fn new(n: usize, k: usize, m: usize, d: usize, q: u32) -> Result<Self> {
        if n == 0 || d == 0 || d > n || k + m > n {
            return Err(Error::Precondition(format!(
                "invalid parameters [[{n},{k}:{m},{d}]]"
            )));
        }
        Ok(CodeParameters { n, k, m, d, q })
    }
}

impl fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}:{},{}]]_{}", self.n, self.k, self.m, self.d, self.q)
    }
}

/// A broken code invariant, naming the offending rows (0-based indices within
/// their section).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeViolation {
    StabilizerCount { expected: usize, found: usize },
    StabilizersAnticommute { first: usize, second: usize },
    DependentStabilizer { index: usize },
    LogicalAnticommutesWithStabilizer { logical: usize, stabilizer: usize },
    LogicalPairing { first: usize, second: usize },
    DependentLogical { index: usize },
    DependentTranslation { index: usize },
    BrokenChain(&'static str),
    ProjectorRank { expected: usize, found: usize },
}

impl fmt::Display for CodeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CodeViolation::*;
        match self {
            StabilizerCount { expected, found } => {
                write!(f, "expected {expected} stabilizer rows, found {found}")
            }
            StabilizersAnticommute { first, second } => {
                write!(f, "stabilizer rows {first} and {second} anticommute")
            }
            DependentStabilizer { index } => write!(f, "stabilizer row {index} is dependent"),
            LogicalAnticommutesWithStabilizer { logical, stabilizer } => write!(
                f,
                "logical row {logical} anticommutes with stabilizer row {stabilizer}"
            ),
            LogicalPairing { first, second } => write!(
                f,
                "logical rows {first} and {second} violate the X/Z pairing"
            ),
            DependentLogical { index } => write!(f, "logical row {index} is dependent"),
            DependentTranslation { index } => write!(
                f,
                "translation row {index} lies in the span of the rows above it"
            ),
            BrokenChain(what) => write!(f, "nested chain broken: {what}"),
            ProjectorRank { expected, found } => write!(
                f,
                "code projector has rank {found}, expected {expected}"
            ),
        }
    }
}

/// A hybrid stabilizer code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HybridCode {
    n: usize,
    q: u32,
    stabilizer: Vec<PauliVector>,
    logicals: Vec<(PauliVector, PauliVector)>,
    translations: Vec<PauliVector>,
    claimed_d: Option<usize>,
}

/// The four nested additive codes of a hybrid code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedCodes {
    /// Symplectic dual of `C*`.
    pub c: AdditiveCode,
    /// Stabilizer.
    pub c0: AdditiveCode,
    /// Normalizer.
    pub c0_star: AdditiveCode,
    /// Union of the translated normalizer cosets.
    pub c_star: AdditiveCode,
}

impl DerivedCodes {
    pub fn n(&self) -> usize {
        self.c0.n()
    }

    pub fn ranks(&self) -> (usize, usize, usize, usize) {
        (
            self.c.rank(),
            self.c0.rank(),
            self.c0_star.rank(),
            self.c_star.rank(),
        )
    }

    /// Builds the chain from a self-orthogonal `c0` and a code `c_star ⊇ c0*`.
    pub fn from_pair(c0: AdditiveCode, c_star: AdditiveCode) -> Result<Self> {
        if !c0.is_self_orthogonal() {
            return Err(Error::Precondition("C0 is not self-orthogonal".into()));
        }
        let c0_star = c0.symplectic_dual()?;
        if !c0_star.is_subcode_of(&c_star)? {
            return Err(Error::InvalidCode(CodeViolation::BrokenChain(
                "C0* is not contained in C*",
            )));
        }
        let c = c_star.symplectic_dual()?;
        Ok(DerivedCodes {
            c,
            c0,
            c0_star,
            c_star,
        })
    }
}

fn check_len(n: usize, v: &PauliVector) -> Result<()> {
    if v.n() != n {
        return Err(Error::Dimension {
            expected: n,
            found: v.n(),
        });
    }
    Ok(())
}

impl HybridCode {
    /// Assembles a code from its sections. Only row lengths are checked here;
    /// call [`HybridCode::validate`] for the algebraic invariants.
    pub fn new(
        n: usize,
        q: u32,
        stabilizer: Vec<PauliVector>,
        logicals: Vec<(PauliVector, PauliVector)>,
        translations: Vec<PauliVector>,
    ) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
        }
        if q != 2 {
            return Err(Error::UnsupportedAlphabet(q));
        }
        for v in stabilizer
            .iter()
            .chain(logicals.iter().flat_map(|(a, b)| [a, b]))
            .chain(&translations)
        {
            check_len(n, v)?;
        }
        Ok(HybridCode {
            n,
            q,
            stabilizer,
            logicals,
            translations,
            claimed_d: None,
        })
    }

    /// Builds a code whose logical pairs are extracted from `normalizer_rows`
    /// (rows that, together with the stabilizer, generate `C₀*`) by symplectic
    /// Gram–Schmidt.
    pub fn from_normalizer(
        n: usize,
        stabilizer: Vec<PauliVector>,
        normalizer_rows: &[PauliVector],
        translations: Vec<PauliVector>,
    ) -> Result<Self> {
        let logicals = symplectic_pairs(normalizer_rows)?;
        HybridCode::new(n, 2, stabilizer, logicals, translations)
    }

    pub fn with_claimed_d(mut self, d: Option<usize>) -> Self {
        self.claimed_d = d;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.logicals.len()
    }

    pub fn m(&self) -> usize {
        self.translations.len()
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn claimed_d(&self) -> Option<usize> {
        self.claimed_d
    }

    pub fn stabilizer(&self) -> &[PauliVector] {
        &self.stabilizer
    }

    pub fn logicals(&self) -> &[(PauliVector, PauliVector)] {
        &self.logicals
    }

    pub fn translations(&self) -> &[PauliVector] {
        &self.translations
    }

    /// Logical rows flattened as X̄₁ Z̄₁ X̄₂ Z̄₂ …
    pub fn logical_rows(&self) -> Vec<PauliVector> {
        self.logicals.iter().flat_map(|&(x, z)| [x, z]).collect()
    }

    /// Checks every invariant and returns the nested codes.
    pub fn validate(&self) -> Result<DerivedCodes> {
        use CodeViolation::*;
        let n = self.n;
        let k = self.k();
        if self.stabilizer.len() + k != n {
            return Err(StabilizerCount {
                expected: n.saturating_sub(k),
                found: self.stabilizer.len(),
            }
            .into());
        }
        for (i, a) in self.stabilizer.iter().enumerate() {
            for (j, b) in self.stabilizer.iter().enumerate().skip(i + 1) {
                if a.anticommutes(b) {
                    return Err(StabilizersAnticommute { first: i, second: j }.into());
                }
            }
        }
        let mut ech = Echelon::new();
        for (i, s) in self.stabilizer.iter().enumerate() {
            if !ech.insert(s.key()) {
                return Err(DependentStabilizer { index: i }.into());
            }
        }
        let rows = self.logical_rows();
        for (li, l) in rows.iter().enumerate() {
            if let Some(si) = self.stabilizer.iter().position(|s| s.anticommutes(l)) {
                return Err(LogicalAnticommutesWithStabilizer {
                    logical: li,
                    stabilizer: si,
                }
                .into());
            }
        }
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let partners = i / 2 == j / 2;
                if rows[i].anticommutes(&rows[j]) != partners {
                    return Err(LogicalPairing { first: i, second: j }.into());
                }
            }
        }
        for (i, l) in rows.iter().enumerate() {
            if !ech.insert(l.key()) {
                return Err(DependentLogical { index: i }.into());
            }
        }
        for (i, t) in self.translations.iter().enumerate() {
            if !ech.insert(t.key()) {
                return Err(DependentTranslation { index: i }.into());
            }
        }

        let c0 = AdditiveCode::from_generators(n, &self.stabilizer)?;
        let c0_star = c0.extended(&rows)?;
        let c_star = c0_star.extended(&self.translations)?;
        let c = c_star.symplectic_dual()?;
        if c0_star != c0.symplectic_dual()? {
            return Err(BrokenChain("stabilizer and logicals do not span the normalizer").into());
        }
        if !c.is_subcode_of(&c0)? {
            return Err(BrokenChain("C is not contained in C0").into());
        }
        let expected = (n - k - self.m(), n - k, n + k, n + k + self.m());
        let derived = DerivedCodes {
            c,
            c0,
            c0_star,
            c_star,
        };
        if derived.ranks() != expected {
            return Err(BrokenChain("rank quadruple differs from (n-k-m, n-k, n+k, n+k+m)").into());
        }
        Ok(derived)
    }

    /// Parameters with `d` taken from the claimed distance (0 if absent).
    pub fn parameters(&self) -> CodeParameters {
        CodeParameters {
            n: self.n,
            k: self.k(),
            m: self.m(),
            d: self.claimed_d.unwrap_or(0),
            q: self.q,
        }
    }

    /// Text form: header `n k m q [d]`, stabilizer rows, `---`, logical rows,
    /// `===`, translation rows.
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {} {} {}", self.n, self.k(), self.m(), self.q);
        if let Some(d) = self.claimed_d {
            out.push_str(&format!(" {d}"));
        }
        out.push('\n');
        for s in &self.stabilizer {
            out.push_str(&format!("{s}\n"));
        }
        out.push_str("---\n");
        for l in self.logical_rows() {
            out.push_str(&format!("{l}\n"));
        }
        out.push_str("===\n");
        for t in &self.translations {
            out.push_str(&format!("{t}\n"));
        }
        out
    }

    /// Parses the text form written by [`HybridCode::serialize`]. `#` starts a
    /// comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line 'n k m q'".into(),
        })?;
        let fields: Vec<usize> = header
            .split_whitespace()
            .map(|f| f.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse {
                line: hline,
                message: format!("bad header '{header}'"),
            })?;
        if !(4..=5).contains(&fields.len()) {
            return Err(Error::Parse {
                line: hline,
                message: "header must be 'n k m q' with optional claimed distance".into(),
            });
        }
        let (n, k, m, q) = (fields[0], fields[1], fields[2], fields[3]);
        let claimed = fields.get(4).copied();
        if q != 2 {
            return Err(Error::UnsupportedAlphabet(q as u32));
        }
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::Parse {
                line: hline,
                message: format!("length {n} outside 1..={MAX_QUBITS}"),
            });
        }

        let mut sections: [Vec<(usize, PauliVector)>; 3] = Default::default();
        let mut current = 0;
        let mut last_line = hline;
        for (lineno, line) in lines {
            last_line = lineno;
            match line {
                "---" if current == 0 => current = 1,
                "===" if current == 1 => current = 2,
                "---" | "===" => {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("unexpected section marker '{line}'"),
                    })
                }
                _ => {
                    let row: String = line.chars().filter(|c| !c.is_whitespace()).collect();
                    let v = parse_row(&row, n, lineno)?;
                    sections[current].push((lineno, v));
                }
            }
        }
        if current < 2 {
            let marker = if current == 0 { "---" } else { "===" };
            return Err(Error::Parse {
                line: last_line,
                message: format!("missing section marker '{marker}'"),
            });
        }
        let [stab, logs, trans] = sections;
        let count_err = |what: &str, expected: usize, rows: &[(usize, PauliVector)]| Error::Parse {
            line: rows.last().map(|r| r.0).unwrap_or(hline),
            message: format!("expected {expected} {what} rows, found {}", rows.len()),
        };
        if k > n || stab.len() != n - k {
            return Err(count_err("stabilizer", n.saturating_sub(k), &stab));
        }
        if logs.len() != 2 * k {
            return Err(count_err("logical", 2 * k, &logs));
        }
        if trans.len() != m {
            return Err(count_err("translation", m, &trans));
        }
        let logicals = logs.chunks(2).map(|c| (c[0].1, c[1].1)).collect();
        Ok(HybridCode::new(
            n,
            2,
            stab.into_iter().map(|r| r.1).collect(),
            logicals,
            trans.into_iter().map(|r| r.1).collect(),
        )?
        .with_claimed_d(claimed))
    }
}

pub(crate) fn parse_row(row: &str, n: usize, line: usize) -> Result<PauliVector> {
    if row.chars().count() != n {
        return Err(Error::Parse {
            line,
            message: format!("row '{row}' has length {}, expected {n}", row.chars().count()),
        });
    }
    row.parse::<PauliVector>().map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => other,
    })
}

/// Pairs up `rows` into (X̄, Z̄) with X̄ᵢ·Z̄ⱼ anticommuting iff i = j, by
/// symplectic Gram–Schmidt. Rows that are already proper pairs come back
/// unchanged.
pub fn symplectic_pairs(rows: &[PauliVector]) -> Result<Vec<(PauliVector, PauliVector)>> {
    let mut pool: Vec<PauliVector> = rows.to_vec();
    let mut pairs = Vec::new();
    while !pool.is_empty() {
        let a = pool.remove(0);
        let Some(j) = pool.iter().position(|b| a.anticommutes(b)) else {
            if a.is_identity() {
                continue;
            }
            return Err(Error::Precondition(format!(
                "row {a} has no symplectic partner"
            )));
        };
        let b = pool.remove(j);
        for r in pool.iter_mut() {
            let mut v = *r;
            if r.anticommutes(&b) {
                v = v.mul(&a);
            }
            if r.anticommutes(&a) {
                v = v.mul(&b);
            }
            *r = v;
        }
        pairs.push((a, b));
    }
    Ok(pairs)
}

impl fmt::Display for HybridCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn catalog_code_validates_with_expected_ranks() {
        let h = catalog::code("7_1_1_3").unwrap();
        let d = h.validate().unwrap();
        assert_eq!(d.ranks(), (5, 6, 8, 9));
    }

    #[test]
    fn dependent_stabilizer_row_detected() {
        let h = catalog::code("7_1_1_3").unwrap();
        let mut stab = h.stabilizer().to_vec();
        stab[1] = stab[0];
        let bad = HybridCode::new(7, 2, stab, h.logicals().to_vec(), h.translations().to_vec())
            .unwrap();
        assert!(matches!(
            bad.validate(),
            Err(Error::InvalidCode(CodeViolation::DependentStabilizer { index: 1 }))
        ));
    }

    #[test]
    fn self_dual_state_has_equal_codes() {
        // [[2,0]] Bell state
        let h = HybridCode::new(
            2,
            2,
            vec!["XX".parse().unwrap(), "ZZ".parse().unwrap()],
            vec![],
            vec![],
        )
        .unwrap();
        let d = h.validate().unwrap();
        assert_eq!(d.c0, d.c);
        assert_eq!(d.c0_star, d.c_star);
    }

    #[test]
    fn anticommuting_stabilizers_reported() {
        let h = HybridCode::new(
            2,
            2,
            vec!["XI".parse().unwrap(), "ZI".parse().unwrap()],
            vec![],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            h.validate(),
            Err(Error::InvalidCode(CodeViolation::StabilizersAnticommute { first: 0, second: 1 }))
        ));
    }

    #[test]
    fn translation_inside_normalizer_rejected() {
        let h = catalog::code("7_1_1_3").unwrap();
        let bad = HybridCode::new(
            7,
            2,
            h.stabilizer().to_vec(),
            h.logicals().to_vec(),
            vec![h.logicals()[0].0.mul(&h.stabilizer()[2])],
        )
        .unwrap();
        assert!(matches!(
            bad.validate(),
            Err(Error::InvalidCode(CodeViolation::DependentTranslation { index: 0 }))
        ));
    }

    #[test]
    fn serialized_catalog_code_parses_back() {
        let h = catalog::code("7_1_1_3").unwrap();
        let text = h.serialize();
        assert!(text.starts_with("7 1 1 2"));
        assert_eq!(HybridCode::parse(&text).unwrap(), h);
    }

    #[test]
    fn empty_translation_section_gives_plain_code() {
        let text = "2 0 0 2\n# Bell pair\nXX\nZZ\n---\n===\n";
        let h = HybridCode::parse(text).unwrap();
        assert_eq!((h.k(), h.m()), (0, 0));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad_char = "2 0 0 2\nXX\nZQ\n---\n===\n";
        assert!(matches!(HybridCode::parse(bad_char), Err(Error::Parse { line: 3, .. })));
        let bad_len = "2 0 0 2\nXX\nZZZ\n---\n===\n";
        assert!(matches!(HybridCode::parse(bad_len), Err(Error::Parse { line: 3, .. })));
        let no_marker = "2 0 0 2\nXX\nZZ\n---\n";
        match HybridCode::parse(no_marker) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("===")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn gram_schmidt_leaves_proper_pairs_alone() {
        let h = catalog::code("7_1_1_3").unwrap();
        let rows = h.logical_rows();
        assert_eq!(symplectic_pairs(&rows).unwrap(), h.logicals().to_vec());
    }
}
