//! Super RSK over the multiset superalphabet: the biletter order, 0- and
//! 1-insertion, the insertion bijection and its inverse.
//!
//! Letters are multisets of plain/barred values, graded by the parity of the
//! barred count: even parity letters behave like ordinary alphabet letters
//! (weakly increasing in rows, strict in columns), odd parity letters dually.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::letter::Multiset;
use crate::partitions::Partition;
use crate::{Error, Result};

pub type Biletter = (Multiset, Multiset);

/// Total order on biletters: first coordinates compare directly; on a tie the
/// odd second coordinate comes before the even one, even seconds sort
/// ascending and odd seconds descending.
pub fn biletter_cmp(x: &Biletter, y: &Biletter) -> Ordering {
    x.0.cmp(&y.0).then_with(|| match (x.1.parity(), y.1.parity()) {
        (1, 0) => Ordering::Less,
        (0, 1) => Ordering::Greater,
        (0, 0) => x.1.cmp(&y.1),
        _ => y.1.cmp(&x.1),
    })
}

/// A biletter is mixed when its two coordinates have opposite parity.
pub fn is_mixed(bl: &Biletter) -> bool {
    bl.0.parity() != bl.1.parity()
}

/// An ordered biword in which no mixed biletter repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biword(Vec<Biletter>);

impl Biword {
    pub fn new(letters: Vec<Biletter>) -> Result<Self> {
        for w in letters.windows(2) {
            match biletter_cmp(&w[0], &w[1]) {
                Ordering::Greater => return Err(Error::invalid("biword is not ordered")),
                Ordering::Equal if is_mixed(&w[0]) => {
                    return Err(Error::invalid("biword repeats a mixed biletter"))
                }
                _ => {}
            }
        }
        Ok(Biword(letters))
    }

    /// Sort the biletters into the biletter order, then validate.
    pub fn sorted(mut letters: Vec<Biletter>) -> Result<Self> {
        letters.sort_by(biletter_cmp);
        Self::new(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Biletter] {
        &self.0
    }
}

fn letter_token(m: &Multiset) -> String {
    if m.len() == 1 {
        m.letters()[0].to_string()
    } else {
        m.to_string()
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |pick: &dyn Fn(&Biletter) -> &Multiset| {
            self.0
                .iter()
                .map(|bl| letter_token(pick(bl)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "[{} / {}]", side(&|bl| &bl.0), side(&|bl| &bl.1))
    }
}

/// Which of the two dual insertion procedures to run.  Zero-insertion sends
/// even letters through rows and odd letters through columns with a weak
/// append / strictly-larger bump; one-insertion swaps the roles and the
/// comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Zero,
    One,
}

impl Mode {
    pub fn of_parity(parity: u8) -> Mode {
        if parity == 0 {
            Mode::Zero
        } else {
            Mode::One
        }
    }

    fn target(self, parity: u8, row: usize, col: usize) -> Target {
        match (self, parity) {
            (Mode::Zero, 0) | (Mode::One, 1) => Target::Row(row),
            _ => Target::Col(col),
        }
    }

    fn bumps(self, resident: &Multiset, incoming: &Multiset) -> bool {
        match self {
            Mode::Zero => resident > incoming,
            Mode::One => resident >= incoming,
        }
    }
}

enum Target {
    Row(usize),
    Col(usize),
}

/// A tableau of partition shape filled with multiset letters; `rows[0]` is the
/// bottom row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SuperTableau {
    rows: Vec<Vec<Multiset>>,
}

impl SuperTableau {
    pub fn empty() -> Self {
        SuperTableau { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<Multiset>>) -> Result<Self> {
        let t = SuperTableau { rows };
        let shape = t.shape();
        if !crate::partitions::is_partition(&shape) {
            return Err(Error::invalid(format!(
                "row lengths {shape:?} do not weakly decrease upward"
            )));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<Multiset>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Multiset>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Cell contents as a sorted list, i.e. the content multiset.
    pub fn content(&self) -> Vec<Multiset> {
        let mut out: Vec<Multiset> = self.rows.iter().flatten().cloned().collect();
        out.sort();
        out
    }

    /// Rows and columns weakly increase, odd letters are strict along rows and
    /// even letters strict along columns.
    pub fn is_ssst(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                if j > 0 {
                    let left = &row[j - 1];
                    if left > m || (left == m && m.parity() == 1) {
                        return false;
                    }
                }
                if i > 0 {
                    let below = &self.rows[i - 1][j];
                    if below > m || (below == m && m.parity() == 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Insert one letter, returning the new tableau and the coordinates of the
    /// created box.
    pub fn insert(&self, mode: Mode, letter: Multiset) -> (SuperTableau, (usize, usize)) {
        let mut rows = self.rows.clone();
        let mut cur = letter;
        let mut target = mode.target(cur.parity(), 0, 0);
        loop {
            match target {
                Target::Row(r) => {
                    if r == rows.len() {
                        rows.push(vec![cur]);
                        return (SuperTableau { rows }, (r, 0));
                    }
                    match rows[r].iter().position(|m| mode.bumps(m, &cur)) {
                        Some(j) => {
                            let evicted = std::mem::replace(&mut rows[r][j], cur);
                            target = mode.target(evicted.parity(), r + 1, j + 1);
                            cur = evicted;
                        }
                        None => {
                            rows[r].push(cur);
                            let j = rows[r].len() - 1;
                            debug_assert!(r == 0 || rows[r - 1].len() >= rows[r].len());
                            return (SuperTableau { rows }, (r, j));
                        }
                    }
                }
                Target::Col(c) => {
                    let height = rows.iter().take_while(|row| row.len() > c).count();
                    match (0..height).find(|&i| mode.bumps(&rows[i][c], &cur)) {
                        Some(i) => {
                            let evicted = std::mem::replace(&mut rows[i][c], cur);
                            target = mode.target(evicted.parity(), i + 1, c + 1);
                            cur = evicted;
                        }
                        None => {
                            if height == rows.len() {
                                rows.push(Vec::new());
                            }
                            debug_assert_eq!(rows[height].len(), c);
                            rows[height].push(cur);
                            return (SuperTableau { rows }, (height, c));
                        }
                    }
                }
            }
        }
    }

    /// Outer corners: boxes whose removal leaves a partition shape.
    fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.rows.len())
            .filter(|&r| r + 1 == self.rows.len() || self.rows[r + 1].len() < self.rows[r].len())
            .map(|r| (r, self.rows[r].len() - 1))
            .collect()
    }

    fn remove_corner(&self, (r, c): (usize, usize)) -> SuperTableau {
        let mut rows = self.rows.clone();
        debug_assert_eq!(rows[r].len() - 1, c);
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        SuperTableau { rows }
    }

    fn max_letter(&self) -> Option<&Multiset> {
        self.rows.iter().flatten().max()
    }
}

impl fmt::Display for SuperTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join("| "))
    }
}

/// Run the insertion algorithm: letter i of the bottom row is inserted with
/// the mode given by the parity of the top letter, which is recorded in the
/// box the insertion creates.
pub fn srsk(w: &Biword) -> (SuperTableau, SuperTableau) {
    let mut p = SuperTableau::empty();
    let mut q_rows: Vec<Vec<Multiset>> = Vec::new();
    for (a, b) in w.letters() {
        let (np, (r, c)) = p.insert(Mode::of_parity(a.parity()), b.clone());
        p = np;
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        debug_assert_eq!(q_rows[r].len(), c);
        q_rows[r].push(a.clone());
    }
    (p, SuperTableau { rows: q_rows })
}

/// Recover the unique ordered restricted biword inserting to `(p, q)`.
///
/// Reverse bumping runs from the corner holding the largest recording letter;
/// where the un-bump site is ambiguous every candidate is tried, each checked
/// by re-running the forward insertion.
pub fn srsk_inverse(p: &SuperTableau, q: &SuperTableau) -> Result<Biword> {
    if p.shape() != q.shape() {
        return Err(Error::invalid("tableaux have different shapes"));
    }
    if !p.is_ssst() || !q.is_ssst() {
        return Err(Error::invalid("input tableau is not semistandard"));
    }
    let total = p.size();
    let mut acc: Vec<Biletter> = Vec::new();
    let mut deepest = 0usize;
    if !reverse_search(p, q, None, &mut acc, &mut deepest) {
        return Err(Error::invalid(format!(
            "tableau pair is not an insertion image: reverse bump fails at step {} of {total}",
            total - deepest
        )));
    }
    acc.reverse();
    Biword::new(acc)
}

fn reverse_search(
    p: &SuperTableau,
    q: &SuperTableau,
    bound: Option<Biletter>,
    acc: &mut Vec<Biletter>,
    deepest: &mut usize,
) -> bool {
    if p.is_empty() {
        return true;
    }
    *deepest = (*deepest).max(acc.len());
    let amax = q.max_letter().expect("nonempty").clone();
    for corner in q.corners() {
        if q.rows[corner.0][corner.1] != amax {
            continue;
        }
        let mode = Mode::of_parity(amax.parity());
        let v = p.rows[corner.0][corner.1].clone();
        let base = p.remove_corner(corner);
        let qr = q.remove_corner(corner);
        let mut rows = base.rows.clone();
        let mut cands: Vec<(Multiset, SuperTableau)> = Vec::new();
        unbump(mode, &mut rows, v, corner, &mut cands);
        for (b, cand) in cands {
            let (check, created) = cand.insert(mode, b.clone());
            if check != *p || created != corner {
                continue;
            }
            let bl = (amax.clone(), b);
            if let Some(prev) = &bound {
                match biletter_cmp(&bl, prev) {
                    Ordering::Greater => continue,
                    Ordering::Equal if is_mixed(&bl) => continue,
                    _ => {}
                }
            }
            acc.push(bl.clone());
            if reverse_search(&cand, &qr, Some(bl), acc, deepest) {
                return true;
            }
            acc.pop();
        }
    }
    false
}

/// Walk a reverse bump chain nondeterministically, emitting every
/// `(original letter, un-inserted tableau)` completion.  `carry` is the letter
/// evicted from `pos`; whether it travelled by row or column follows from its
/// parity and the mode.
fn unbump(
    mode: Mode,
    rows: &mut Vec<Vec<Multiset>>,
    carry: Multiset,
    pos: (usize, usize),
    out: &mut Vec<(Multiset, SuperTableau)>,
) {
    let by_row = matches!(
        (mode, carry.parity()),
        (Mode::Zero, 0) | (Mode::One, 1)
    );
    let admissible = |resident: &Multiset, carry: &Multiset| match mode {
        Mode::Zero => resident < carry,
        Mode::One => resident <= carry,
    };
    if by_row {
        if pos.0 == 0 {
            out.push((carry, SuperTableau { rows: rows.clone() }));
            return;
        }
        let r = pos.0 - 1;
        for j in 0..rows[r].len() {
            if admissible(&rows[r][j], &carry) {
                let u = std::mem::replace(&mut rows[r][j], carry.clone());
                unbump(mode, rows, u.clone(), (r, j), out);
                rows[r][j] = u;
            }
        }
    } else {
        if pos.1 == 0 {
            out.push((carry, SuperTableau { rows: rows.clone() }));
            return;
        }
        let c = pos.1 - 1;
        let height = rows.iter().take_while(|row| row.len() > c).count();
        for i in 0..height {
            if admissible(&rows[i][c], &carry) {
                let u = std::mem::replace(&mut rows[i][c], carry.clone());
                unbump(mode, rows, u.clone(), (i, c), out);
                rows[i][c] = u;
            }
        }
    }
}

/// All semistandard supertableaux of the given shape and content.
pub fn enumerate_ssst(shape: &[usize], content: &[Multiset]) -> Vec<SuperTableau> {
    let n: usize = shape.iter().sum();
    if n != content.len() {
        return Vec::new();
    }
    let mut pool: BTreeMap<Multiset, usize> = BTreeMap::new();
    for m in content {
        *pool.entry(m.clone()).or_insert(0) += 1;
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<Multiset>> = shape.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();
    fill_ssst(&cells, 0, &mut pool, &mut rows, &mut out);
    out
}

fn fill_ssst(
    cells: &[(usize, usize)],
    k: usize,
    pool: &mut BTreeMap<Multiset, usize>,
    rows: &mut Vec<Vec<Multiset>>,
    out: &mut Vec<SuperTableau>,
) {
    if k == cells.len() {
        out.push(SuperTableau { rows: rows.clone() });
        return;
    }
    let (i, j) = cells[k];
    let choices: Vec<Multiset> = pool
        .iter()
        .filter(|(_, &cnt)| cnt > 0)
        .map(|(m, _)| m.clone())
        .collect();
    for m in choices {
        if j > 0 {
            let left = &rows[i][j - 1];
            if *left > m || (*left == m && m.parity() == 1) {
                continue;
            }
        }
        if i > 0 {
            let below = &rows[i - 1][j];
            if *below > m || (*below == m && m.parity() == 0) {
                continue;
            }
        }
        *pool.get_mut(&m).unwrap() -= 1;
        rows[i].push(m.clone());
        fill_ssst(cells, k + 1, pool, rows, out);
        rows[i].pop();
        *pool.get_mut(&m).unwrap() += 1;
    }
}

/// All ordered restricted biwords with the given top and bottom contents.
pub fn enumerate_orbw(top: &[Multiset], bottom: &[Multiset]) -> Vec<Biword> {
    if top.len() != bottom.len() {
        return Vec::new();
    }
    let mut tops: BTreeMap<Multiset, usize> = BTreeMap::new();
    for m in top {
        *tops.entry(m.clone()).or_insert(0) += 1;
    }
    let mut pool: BTreeMap<Multiset, usize> = BTreeMap::new();
    for m in bottom {
        *pool.entry(m.clone()).or_insert(0) += 1;
    }
    let tops: Vec<(Multiset, usize)> = tops.into_iter().collect();
    let mut out = Vec::new();
    let mut acc: Vec<Biletter> = Vec::new();
    assign_orbw(&tops, 0, &mut pool, &mut acc, &mut out);
    out
}

fn assign_orbw(
    tops: &[(Multiset, usize)],
    idx: usize,
    pool: &mut BTreeMap<Multiset, usize>,
    acc: &mut Vec<Biletter>,
    out: &mut Vec<Biword>,
) {
    if idx == tops.len() {
        if let Ok(w) = Biword::sorted(acc.clone()) {
            out.push(w);
        }
        return;
    }
    let (a, need) = &tops[idx];
    let distinct: Vec<Multiset> = pool
        .iter()
        .filter(|(_, &cnt)| cnt > 0)
        .map(|(m, _)| m.clone())
        .collect();
    choose_bottoms(a, *need, &distinct, 0, pool, tops, idx, acc, out);
}

#[allow(clippy::too_many_arguments)]
fn choose_bottoms(
    a: &Multiset,
    need: usize,
    distinct: &[Multiset],
    from: usize,
    pool: &mut BTreeMap<Multiset, usize>,
    tops: &[(Multiset, usize)],
    idx: usize,
    acc: &mut Vec<Biletter>,
    out: &mut Vec<Biword>,
) {
    if need == 0 {
        assign_orbw(tops, idx + 1, pool, acc, out);
        return;
    }
    if from == distinct.len() {
        return;
    }
    let avail = pool[&distinct[from]];
    let max_take = avail.min(need);
    for take in (0..=max_take).rev() {
        *pool.get_mut(&distinct[from]).unwrap() = avail - take;
        for _ in 0..take {
            acc.push((a.clone(), distinct[from].clone()));
        }
        choose_bottoms(a, need - take, distinct, from + 1, pool, tops, idx, acc, out);
        for _ in 0..take {
            acc.pop();
        }
        *pool.get_mut(&distinct[from]).unwrap() = avail;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::Letter;
    use crate::partitions::partitions_of;
    use std::collections::BTreeSet;

    fn s(l: Letter) -> Multiset {
        Multiset::singleton(l)
    }

    fn e1() -> Multiset {
        s(Letter::plain(1))
    }
    fn e2() -> Multiset {
        s(Letter::plain(2))
    }
    fn o1() -> Multiset {
        s(Letter::barred(1))
    }
    fn o2() -> Multiset {
        s(Letter::barred(2))
    }

    #[test]
    fn biletter_order_cases() {
        // first coordinates decide
        assert_eq!(biletter_cmp(&(e1(), o2()), &(e2(), e1())), Ordering::Less);
        // equal firsts: odd second before even second
        assert_eq!(biletter_cmp(&(e1(), o1()), &(e1(), e2())), Ordering::Less);
        // equal firsts, both odd: descending
        assert_eq!(biletter_cmp(&(e1(), o2()), &(e1(), o1())), Ordering::Less);
        // equal firsts, both even: ascending
        assert_eq!(biletter_cmp(&(e1(), e1()), &(e1(), e2())), Ordering::Less);
    }

    #[test]
    fn biword_validation() {
        assert!(Biword::new(vec![(e1(), e1()), (e1(), e1())]).is_ok());
        assert!(Biword::new(vec![(e2(), e1()), (e1(), e1())]).is_err());
        // repeated mixed biletter
        assert!(Biword::new(vec![(e1(), o1()), (e1(), o1())]).is_err());
        // same repetition is fine once sorted contents differ
        assert!(Biword::sorted(vec![(e1(), o1()), (e1(), o2())]).is_ok());
    }

    #[test]
    fn insert_into_empty() {
        for mode in [Mode::Zero, Mode::One] {
            for l in [e1(), o1()] {
                let (t, pos) = SuperTableau::empty().insert(mode, l.clone());
                assert_eq!(pos, (0, 0));
                assert_eq!(t.rows(), &[vec![l]]);
            }
        }
    }

    #[test]
    fn zero_insertion_appends_even() {
        let t = SuperTableau::from_rows(vec![vec![e1(), e2()]]).unwrap();
        let (t2, pos) = t.insert(Mode::Zero, e2());
        assert_eq!(pos, (0, 2));
        assert_eq!(t2.rows(), &[vec![e1(), e2(), e2()]]);
    }

    #[test]
    fn one_insertion_bumps_on_equality() {
        // odd letter equal to the sole entry: the larger-or-equal rule bumps it
        let t = SuperTableau::from_rows(vec![vec![o1()]]).unwrap();
        let (t2, pos) = t.insert(Mode::One, o1());
        assert_eq!(pos, (1, 0));
        assert_eq!(t2.rows(), &[vec![o1()], vec![o1()]]);
    }

    #[test]
    fn insertion_preserves_semistandardness() {
        // every word of length ≤ 4 over each 2-letter superalphabet
        let alphabets: Vec<Vec<Multiset>> = vec![
            vec![e1(), e2()],
            vec![o1(), o2()],
            vec![e1(), o1()],
        ];
        for alpha in &alphabets {
            for len in 0..=4usize {
                for code in 0..(alpha.len() as u32).pow(len as u32) {
                    let mut word = Vec::new();
                    let mut c = code;
                    for _ in 0..len {
                        word.push(alpha[(c % alpha.len() as u32) as usize].clone());
                        c /= alpha.len() as u32;
                    }
                    for mode in [Mode::Zero, Mode::One] {
                        let mut t = SuperTableau::empty();
                        for l in &word {
                            let before = t.size();
                            let (nt, _) = t.insert(mode, l.clone());
                            t = nt;
                            assert_eq!(t.size(), before + 1);
                            assert!(t.is_ssst(), "mode {mode:?} word {word:?} gave {t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn srsk_trivial_words() {
        let (p, q) = srsk(&Biword::new(vec![]).unwrap());
        assert!(p.is_empty() && q.is_empty());
        assert_eq!(srsk_inverse(&p, &q).unwrap(), Biword::new(vec![]).unwrap());

        let w = Biword::new(vec![(o1(), e2())]).unwrap();
        let (p, q) = srsk(&w);
        assert_eq!(p.rows(), &[vec![e2()]]);
        assert_eq!(q.rows(), &[vec![o1()]]);
        assert_eq!(srsk_inverse(&p, &q).unwrap(), w);
    }

    #[test]
    fn srsk_inverse_rejects_bad_inputs() {
        let single = SuperTableau::from_rows(vec![vec![e1()]]).unwrap();
        let twocol = SuperTableau::from_rows(vec![vec![e1()], vec![e2()]]).unwrap();
        assert!(srsk_inverse(&single, &twocol).is_err());
        // evens repeating in a column are not semistandard
        let bad = SuperTableau::from_rows(vec![vec![e1()], vec![e1()]]).unwrap();
        assert!(!bad.is_ssst());
        assert!(srsk_inverse(&bad, &bad).is_err());
    }

    /// Multisets of size `m` drawn from `alpha`.
    fn content_multisets(alpha: &[Multiset], m: usize) -> Vec<Vec<Multiset>> {
        let mut out = Vec::new();
        fn go(
            alpha: &[Multiset],
            from: usize,
            left: usize,
            acc: &mut Vec<Multiset>,
            out: &mut Vec<Vec<Multiset>>,
        ) {
            if left == 0 {
                out.push(acc.clone());
                return;
            }
            if from == alpha.len() {
                return;
            }
            for take in (0..=left).rev() {
                for _ in 0..take {
                    acc.push(alpha[from].clone());
                }
                go(alpha, from + 1, left - take, acc, out);
                for _ in 0..take {
                    acc.pop();
                }
            }
        }
        go(alpha, 0, m, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn exhaustive_bijection_small() {
        let alpha = vec![e1(), e2(), o1(), o2()];
        for m in 0..=3usize {
            for top in content_multisets(&alpha, m) {
                for bottom in content_multisets(&alpha, m) {
                    check_bijection(&top, &bottom, m);
                }
            }
        }
    }

    fn check_bijection(top: &[Multiset], bottom: &[Multiset], m: usize) {
        let words = enumerate_orbw(top, bottom);
        let mut images = BTreeSet::new();
        for w in &words {
            let (p, q) = srsk(w);
            assert!(p.is_ssst() && q.is_ssst());
            assert_eq!(p.shape(), q.shape());
            let mut want_b = bottom.to_vec();
            want_b.sort();
            let mut want_a = top.to_vec();
            want_a.sort();
            assert_eq!(p.content(), want_b);
            assert_eq!(q.content(), want_a);
            assert_eq!(&srsk_inverse(&p, &q).unwrap(), w, "round trip failed");
            images.insert((p, q));
        }
        assert_eq!(images.len(), words.len(), "insertion not injective");
        let by_tableaux: usize = partitions_of(m)
            .iter()
            .map(|lam| {
                enumerate_ssst(lam, top).len() * enumerate_ssst(lam, bottom).len()
            })
            .sum();
        assert_eq!(words.len(), by_tableaux, "count mismatch for {top:?} / {bottom:?}");
    }

    #[test]
    fn display_forms() {
        let w = Biword::new(vec![(e1(), e1()), (e1(), e2()), (o1(), e1())]).unwrap();
        assert_eq!(w.to_string(), "[1 1 ~1 / 1 2 1]");
        let t = SuperTableau::from_rows(vec![vec![e1(), e2()], vec![o1()]]).unwrap();
        assert_eq!(t.to_string(), "[{1} {2}| {~1}]");
    }
}
