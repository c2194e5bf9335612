//! n-qubit Pauli operators modulo phase in the symplectic (x|z) picture.
//!
//! A [`PauliVector`] stores one bit per qubit for the X component and one for
//! the Z component. Qubit 1 of the usual left-to-right string notation is bit 0
//! of both masks. The GF(4) letters map as I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported block length (one machine word per component).
pub const MAX_QUBITS: usize = 64;

#[inline]
pub(crate) fn mask_for(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const NONTRIVIAL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// An n-qubit Pauli operator modulo phase.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliVector {
    n: u8,
    x: u64,
    z: u64,
}

impl PauliVector {
    /// The identity on `n` qubits.
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_masks(n, 0, 0)
    }

    /// Builds a vector from raw masks. Bits at positions `>= n` must be clear.
    pub fn from_masks(n: usize, x: u64, z: u64) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
        }
        let mask = mask_for(n);
        if x & !mask != 0 || z & !mask != 0 {
            return Err(Error::Precondition(format!(
                "mask has bits set beyond qubit {n}"
            )));
        }
        Ok(PauliVector { n: n as u8, x, z })
    }

    #[inline]
    pub(crate) const fn from_masks_unchecked(n: usize, x: u64, z: u64) -> Self {
        PauliVector { n: n as u8, x, z }
    }

    /// Single-qubit Pauli `p` on `qubit` (0-based), identity elsewhere.
    pub fn single(n: usize, qubit: usize, p: Pauli) -> Result<Self> {
        if qubit >= n {
            return Err(Error::Dimension {
                expected: n,
                found: qubit + 1,
            });
        }
        let (x, z) = p.bits();
        Self::from_masks(n, (x as u64) << qubit, (z as u64) << qubit)
    }

    pub fn from_paulis(paulis: &[Pauli]) -> Result<Self> {
        let n = paulis.len();
        let mut x = 0u64;
        let mut z = 0u64;
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
        }
        for (i, p) in paulis.iter().enumerate() {
            let (xb, zb) = p.bits();
            x |= (xb as u64) << i;
            z |= (zb as u64) << i;
        }
        Ok(PauliVector { n: n as u8, x, z })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn x_mask(&self) -> u64 {
        self.x
    }

    #[inline]
    pub fn z_mask(&self) -> u64 {
        self.z
    }

    #[inline]
    pub fn support(&self) -> u64 {
        self.x | self.z
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.support().count_ones() as usize
    }

    #[inline]
    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn get(&self, qubit: usize) -> Pauli {
        Pauli::from_bits((self.x >> qubit) & 1 == 1, (self.z >> qubit) & 1 == 1)
    }

    /// Composition modulo phase (componentwise XOR). Panics on a length mismatch;
    /// use [`PauliVector::try_mul`] for a checked version.
    #[inline]
    pub fn mul(&self, other: &PauliVector) -> PauliVector {
        assert_eq!(self.n, other.n, "Pauli length mismatch");
        PauliVector {
            n: self.n,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
        }
    }

    pub fn try_mul(&self, other: &PauliVector) -> Result<PauliVector> {
        check_same_n(self, other)?;
        Ok(self.mul(other))
    }

    /// The symplectic pairing: `true` when the operators anticommute.
    #[inline]
    pub fn anticommutes(&self, other: &PauliVector) -> bool {
        ((self.x & other.z) ^ (self.z & other.x)).count_ones() & 1 == 1
    }

    /// Symplectic product as a bit; errors on mismatched lengths.
    pub fn symplectic_product(&self, other: &PauliVector) -> Result<u8> {
        check_same_n(self, other)?;
        Ok(self.anticommutes(other) as u8)
    }

    /// Appends `extra` identity positions on the right.
    pub fn extend(&self, extra: usize) -> Result<PauliVector> {
        PauliVector::from_masks(self.n() + extra, self.x, self.z)
    }

    /// Concatenates `self` (left block) with `right`.
    pub fn concat(&self, right: &PauliVector) -> Result<PauliVector> {
        let n = self.n() + right.n();
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
        }
        let shift = self.n();
        let (rx, rz) = if shift >= 64 {
            (0, 0)
        } else {
            (right.x << shift, right.z << shift)
        };
        PauliVector::from_masks(n, self.x | rx, self.z | rz)
    }

    /// Interleaved 128-bit key used for canonical echelon forms: the X bit of
    /// qubit 1 is the most significant bit, then the Z bit of qubit 1, then
    /// qubit 2, and so on.
    pub(crate) fn key(&self) -> u128 {
        let mut k = 0u128;
        for i in 0..self.n() {
            let xb = ((self.x >> i) & 1) as u128;
            let zb = ((self.z >> i) & 1) as u128;
            k |= xb << (127 - 2 * i);
            k |= zb << (126 - 2 * i);
        }
        k
    }

    pub(crate) fn from_key(n: usize, key: u128) -> PauliVector {
        let mut x = 0u64;
        let mut z = 0u64;
        for i in 0..n {
            x |= (((key >> (127 - 2 * i)) & 1) as u64) << i;
            z |= (((key >> (126 - 2 * i)) & 1) as u64) << i;
        }
        PauliVector::from_masks_unchecked(n, x, z)
    }
}

pub(crate) fn check_same_n(a: &PauliVector, b: &PauliVector) -> Result<()> {
    if a.n != b.n {
        return Err(Error::Dimension {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(())
}

impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            write!(f, "{}", self.get(i).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliVector({self})")
    }
}

impl FromStr for PauliVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut paulis = Vec::with_capacity(s.len());
        for (col, c) in s.chars().enumerate() {
            let p = Pauli::from_char(c).ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("bad Pauli character '{c}' at column {}", col + 1),
            })?;
            paulis.push(p);
        }
        if paulis.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "empty Pauli string".into(),
            });
        }
        PauliVector::from_paulis(&paulis)
    }
}

impl PartialOrd for PauliVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PauliVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| other.key().cmp(&self.key()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliVector {
        s.parse().unwrap()
    }

    #[test]
    fn x_and_z_anticommute() {
        assert_eq!(p("X").symplectic_product(&p("Z")).unwrap(), 1);
        assert_eq!(p("Y").symplectic_product(&p("Y")).unwrap(), 0);
    }

    #[test]
    fn every_operator_commutes_with_itself() {
        for s in ["XIIZYYZ", "ZIIIIIX", "YYYYYYY", "IIIIIII"] {
            assert_eq!(p(s).symplectic_product(&p(s)).unwrap(), 0);
        }
    }

    #[test]
    fn printed_stabilizer_rows_commute() {
        assert_eq!(p("XIIZYYZ").symplectic_product(&p("ZIIIIIX")).unwrap(), 0);
    }

    #[test]
    fn weights_of_printed_rows() {
        assert_eq!(PauliVector::identity(7).unwrap().weight(), 0);
        assert_eq!(p("ZIIIIIX").weight(), 2);
        assert_eq!(p("XIIZYYZ").weight(), 5);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            p("XX").symplectic_product(&p("XXX")),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn string_round_trip_and_bad_char() {
        assert_eq!(p("IXYZ").to_string(), "IXYZ");
        assert!("IXQ".parse::<PauliVector>().is_err());
    }

    #[test]
    fn key_round_trip() {
        let v = p("XIZYYZIX");
        assert_eq!(PauliVector::from_key(8, v.key()), v);
        // qubit 1's X bit is the top bit
        assert_eq!(p("XI").key(), 1u128 << 127);
        assert_eq!(p("ZI").key(), 1u128 << 126);
    }

    #[test]
    fn too_many_qubits_rejected() {
        assert!(PauliVector::identity(65).is_err());
        assert!(PauliVector::identity(64).is_ok());
    }

    #[test]
    fn concat_places_right_block_after_left() {
        let v = p("XZ").concat(&p("YI")).unwrap();
        assert_eq!(v.to_string(), "XZYI");
    }

    proptest::proptest! {
        #[test]
        fn symplectic_product_is_bilinear(a in 0u64..256, b in 0u64..256, c in 0u64..256,
                                         d in 0u64..256, e in 0u64..256, f in 0u64..256) {
            let u = PauliVector::from_masks(8, a, b).unwrap();
            let v = PauliVector::from_masks(8, c, d).unwrap();
            let w = PauliVector::from_masks(8, e, f).unwrap();
            proptest::prop_assert_eq!(
                u.mul(&v).anticommutes(&w),
                u.anticommutes(&w) ^ v.anticommutes(&w)
            );
        }

        #[test]
        fn weight_is_subadditive(a in 0u64..1024, b in 0u64..1024, c in 0u64..1024, d in 0u64..1024) {
            let u = PauliVector::from_masks(10, a, b).unwrap();
            let v = PauliVector::from_masks(10, c, d).unwrap();
            proptest::prop_assert!(u.mul(&v).weight() <= u.weight() + v.weight());
        }
    }
}
