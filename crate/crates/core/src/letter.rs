//! Letters of the four-fold alphabet and multisets of letters.
//!
//! A [`Letter`] is a positive value decorated with independent `barred` and
//! `underlined` marks, written `3`, `~3`, `_3`, `~_3`. The total order puts
//! every plain letter below every barred letter, every barred letter below
//! every underlined letter, and every underlined letter below every
//! barred-underlined letter, comparing by value inside each class.
//!
//! A [`Multiset`] keeps its letters sorted and is itself ordered by the
//! *last-letter order*: compare largest elements first, then recurse on what
//! remains, with the empty multiset below everything.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub value: u32,
    pub barred: bool,
    pub underlined: bool,
}

impl Letter {
    pub fn plain(value: u32) -> Self {
        Letter { value, barred: false, underlined: false }
    }

    pub fn barred(value: u32) -> Self {
        Letter { value, barred: true, underlined: false }
    }

    pub fn und(value: u32) -> Self {
        Letter { value, barred: false, underlined: true }
    }

    pub fn und_barred(value: u32) -> Self {
        Letter { value, barred: true, underlined: true }
    }

    /// The same letter with the underline mark added.
    pub fn underlined(self) -> Self {
        Letter { underlined: true, ..self }
    }

    /// The same letter with the underline mark removed.
    pub fn de_underlined(self) -> Self {
        Letter { underlined: false, ..self }
    }

    fn key(&self) -> (bool, bool, u32) {
        (self.underlined, self.barred, self.value)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "~")?;
        }
        if self.underlined {
            write!(f, "_")?;
        }
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite multiset of letters, stored sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Multiset(Vec<Letter>);

impl Multiset {
    pub fn new(mut letters: Vec<Letter>) -> Self {
        letters.sort();
        Multiset(letters)
    }

    pub fn empty() -> Self {
        Multiset(Vec::new())
    }

    pub fn singleton(l: Letter) -> Self {
        Multiset(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn max(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn insert(&mut self, l: Letter) {
        let pos = self.0.partition_point(|&x| x <= l);
        self.0.insert(pos, l);
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Multiset::new(v)
    }

    /// True when no letter repeats.
    pub fn is_set(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn barred_count(&self) -> usize {
        self.0.iter().filter(|l| l.barred).count()
    }

    /// Parity of the number of barred letters: 0 = even block, 1 = odd block.
    pub fn parity(&self) -> u8 {
        (self.barred_count() % 2) as u8
    }

    pub fn any_underlined(&self) -> bool {
        self.0.iter().any(|l| l.underlined)
    }

    pub fn all_underlined(&self) -> bool {
        self.0.iter().all(|l| l.underlined)
    }

    /// The non-underlined letters.
    pub fn top_part(&self) -> Multiset {
        Multiset(self.0.iter().filter(|l| !l.underlined).copied().collect())
    }

    /// The underlined letters, with their underlines removed.
    pub fn bottom_part_de_underlined(&self) -> Multiset {
        Multiset(
            self.0.iter().filter(|l| l.underlined).map(|l| l.de_underlined()).collect(),
        )
    }

    pub fn map(&self, f: impl FnMut(Letter) -> Letter) -> Multiset {
        Multiset::new(self.0.iter().copied().map(f).collect())
    }
}

impl FromIterator<Letter> for Multiset {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Multiset::new(iter.into_iter().collect())
    }
}

impl Ord for Multiset {
    /// Last-letter order, realized as lexicographic comparison of the
    /// reverse-sorted letter sequences (prefixes compare below extensions).
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Multiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
