/// Dense bit vectors over F2 with incremental row reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn xor_with(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn lowest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }
}

/// Echelon basis of a subspace of F2^n, keyed by pivot column.
#[derive(Debug, Default)]
pub(crate) struct Span {
    rows: Vec<(usize, BitVec)>,
}

impl Span {
    fn reduce(&self, v: &mut BitVec) {
        // pivots are inserted in arbitrary order; loop until no pivot hits
        loop {
            let mut changed = false;
            for (p, row) in &self.rows {
                if v.get(*p) {
                    v.xor_with(row);
                    changed = true;
                }
            }
            if !changed {
                return;
            }
        }
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        self.reduce(&mut v);
        match v.lowest_set() {
            None => false,
            Some(p) => {
                for (_, row) in self.rows.iter_mut() {
                    if row.get(p) {
                        row.xor_with(&v);
                    }
                }
                self.rows.push((p, v));
                true
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v);
        v.is_zero()
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}
