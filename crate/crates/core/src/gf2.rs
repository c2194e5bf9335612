//! Row reduction over GF(2) on 128-bit rows. Column order is bit order from the
//! most significant bit down, so the leading one of a row is its pivot.

#[inline]
fn lead(row: u128) -> u32 {
    127 - row.leading_zeros()
}

/// Echelon basis that grows one vector at a time.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Echelon {
    // sorted by pivot, most significant first
    rows: Vec<u128>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis. The residue is zero exactly when `v` is
    /// in the span, and is the same for all members of a coset.
    pub fn reduce(&self, mut v: u128) -> u128 {
        for &r in &self.rows {
            if v >> lead(r) & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    /// Inserts `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: u128) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let p = lead(r);
        let pos = self.rows.partition_point(|&row| lead(row) > p);
        self.rows.insert(pos, r);
        true
    }

    /// Fully reduced row echelon form (each pivot column has a single one).
    pub fn into_rref(mut self) -> Vec<u128> {
        for i in (0..self.rows.len()).rev() {
            let bit = 1u128 << lead(self.rows[i]);
            let row = self.rows[i];
            for j in 0..i {
                if self.rows[j] & bit != 0 {
                    self.rows[j] ^= row;
                }
            }
        }
        self.rows
    }
}

pub(crate) fn rref(rows: impl IntoIterator<Item = u128>) -> Vec<u128> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.into_rref()
}

/// Basis of `{v : popcount(v & row) even for every row}` restricted to the
/// columns in `columns`.
pub(crate) fn nullspace(rows: &[u128], columns: u128) -> Vec<u128> {
    let reduced = rref(rows.iter().map(|r| r & columns));
    let pivots: u128 = reduced.iter().fold(0, |acc, &r| acc | 1u128 << lead(r));
    let mut basis = Vec::new();
    let mut free = columns & !pivots;
    while free != 0 {
        let f = lead(free);
        free &= !(1u128 << f);
        let mut v = 1u128 << f;
        for &r in &reduced {
            if r >> f & 1 == 1 {
                v |= 1u128 << lead(r);
            }
        }
        basis.push(v);
    }
    basis
}
