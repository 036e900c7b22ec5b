//! Dense bit rows used for adjacency storage.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn get(row: &[u64], j: usize) -> bool {
    row[j >> 6] >> (j & 63) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], j: usize) {
    row[j >> 6] |= 1 << (j & 63);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], j: usize) {
    row[j >> 6] &= !(1 << (j & 63));
}

pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// Ascending iterator over the set bits of a row.
pub(crate) struct Ones<'a> {
    row: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(row: &'a [u64]) -> Self {
        Ones {
            row,
            idx: 0,
            cur: row.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.idx];
        }
    }
}

/// Iterates the set bits of a single-word mask in ascending order.
pub(crate) fn mask_iter(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(t)
        }
    })
}
