//! The family of all length-`len` sequences over labels `1..=alphabet`.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequenceFamily {
    pub alphabet: usize,
    pub len: usize,
}

impl SequenceFamily {
    pub fn new(alphabet: usize, len: usize) -> Self {
        SequenceFamily { alphabet, len }
    }

    /// `alphabet^len`, or `None` on overflow.
    pub fn size(&self) -> Option<u128> {
        (self.alphabet as u128).checked_pow(u32::try_from(self.len).ok()?)
    }

    /// Lexicographic order, first coordinate most significant.
    pub fn iter(&self) -> SequenceIter {
        SequenceIter {
            alphabet: self.alphabet,
            next: (self.alphabet > 0 || self.len == 0).then(|| vec![1; self.len]),
        }
    }
}

pub struct SequenceIter {
    alphabet: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for SequenceIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for slot in succ.iter_mut().rev() {
            if *slot < self.alphabet {
                *slot += 1;
                self.next = Some(succ);
                return Some(current);
            }
            *slot = 1;
        }
        Some(current)
    }
}

/// Smallest `l >= 1` with `l^len >= count`, by integer search.
pub fn min_alphabet(len: usize, count: usize) -> usize {
    let mut l = 1;
    while SequenceFamily::new(l, len)
        .size()
        .is_some_and(|s| s < count as u128)
    {
        l += 1;
    }
    l
}

/// Smallest `e >= 0` with `base^e >= x`, i.e. the ceiling of `log_base x`
/// for `x >= 1`. Needs `base >= 2`.
pub fn ceil_log(base: usize, x: usize) -> usize {
    assert!(base >= 2, "logarithm base must be at least 2");
    let mut e = 0;
    let mut power: u128 = 1;
    while power < x as u128 {
        power *= base as u128;
        e += 1;
    }
    e
}
