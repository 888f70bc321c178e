//! Parsers for the textual value grammars, tracking line and column for
//! error reports, and the structured-record mirror of the same values.
//!
//! The grammars are the ones produced by the `Display` impls: letters `3`,
//! `~3`, `_3`, `~_3`; multisets `{1,1,~2}`; partitions `[{1,~2},{_1}]`;
//! tableaux `[. . {1}| {~1} {2}]` (rows bottom-to-top, `.` an empty cell);
//! biwords `[1 1 ~1 / 1 2 1]` (singleton letters bare, larger ones braced);
//! coefficient polynomials `(1/2)x^2 + 3`.

use num::{BigInt, BigRational, One};
use serde::{Deserialize, Serialize};

use crate::letter::{Letter, Multiset};
use crate::msetpart::MultisetPartition;
use crate::poly::CoeffPoly;
use crate::setpart::SetPartition;
use crate::srsk::{Biletter, Biword};
use crate::tableau::MPTableau;
use crate::{Error, Result};

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Scanner {
    fn new(src: &str) -> Self {
        Scanner { chars: src.chars().collect(), pos: 0, line: 1, col: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of input"))),
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected trailing `{c}`"))),
        }
    }

    fn digits(&mut self) -> Result<String> {
        let mut s = String::new();
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            s.push(self.bump().expect("peeked"));
        }
        if s.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.err(format!("expected a digit, found `{c}`")),
                None => self.err("expected a digit, found end of input"),
            });
        }
        Ok(s)
    }

    fn letter(&mut self) -> Result<Letter> {
        let mut barred = false;
        let mut underlined = false;
        if self.peek() == Some('~') {
            self.bump();
            barred = true;
        }
        if self.peek() == Some('_') {
            self.bump();
            underlined = true;
        }
        let value: u32 = self
            .digits()?
            .parse()
            .map_err(|_| self.err("letter value does not fit 32 bits"))?;
        Ok(match (barred, underlined) {
            (false, false) => Letter::plain(value),
            (true, false) => Letter::barred(value),
            (false, true) => Letter::und(value),
            (true, true) => Letter::und_barred(value),
        })
    }

    fn multiset(&mut self) -> Result<Multiset> {
        self.expect('{')?;
        self.skip_ws();
        let mut letters = Vec::new();
        if self.peek() == Some('}') {
            self.bump();
            return Ok(Multiset::empty());
        }
        loop {
            letters.push(self.letter()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                    self.skip_ws();
                }
                Some('}') => {
                    self.bump();
                    return Ok(Multiset::new(letters));
                }
                Some(c) => return Err(self.err(format!("expected `,` or `}}`, found `{c}`"))),
                None => return Err(self.err("expected `,` or `}`, found end of input")),
            }
        }
    }
}

pub fn parse_letter(src: &str) -> Result<Letter> {
    let mut s = Scanner::new(src);
    s.skip_ws();
    let l = s.letter()?;
    s.finish()?;
    Ok(l)
}

pub fn parse_multiset(src: &str) -> Result<Multiset> {
    let mut s = Scanner::new(src);
    s.skip_ws();
    let m = s.multiset()?;
    s.finish()?;
    Ok(m)
}

pub fn parse_multiset_partition(src: &str) -> Result<MultisetPartition> {
    let mut s = Scanner::new(src);
    s.skip_ws();
    s.expect('[')?;
    s.skip_ws();
    let mut blocks = Vec::new();
    if s.peek() == Some(']') {
        s.bump();
        s.finish()?;
        return Ok(MultisetPartition::new(blocks));
    }
    loop {
        let block = s.multiset()?;
        if block.is_empty() {
            return Err(s.err("a partition block cannot be empty"));
        }
        blocks.push(block);
        s.skip_ws();
        match s.peek() {
            Some(',') => {
                s.bump();
                s.skip_ws();
            }
            Some(']') => {
                s.bump();
                s.finish()?;
                return Ok(MultisetPartition::new(blocks));
            }
            Some(c) => return Err(s.err(format!("expected `,` or `]`, found `{c}`"))),
            None => return Err(s.err("expected `,` or `]`, found end of input")),
        }
    }
}

pub fn parse_set_partition(src: &str) -> Result<SetPartition> {
    let pt = parse_multiset_partition(src)?;
    SetPartition::new(pt.blocks().to_vec())
}

pub fn parse_tableau(src: &str) -> Result<MPTableau> {
    let mut s = Scanner::new(src);
    s.skip_ws();
    s.expect('[')?;
    let mut rows: Vec<Vec<Option<Multiset>>> = Vec::new();
    let mut row: Vec<Option<Multiset>> = Vec::new();
    let mut any = false;
    loop {
        s.skip_ws();
        match s.peek() {
            Some(']') => {
                s.bump();
                if any {
                    rows.push(row);
                }
                s.finish()?;
                return MPTableau::new(rows);
            }
            Some('|') => {
                s.bump();
                rows.push(std::mem::take(&mut row));
                any = true;
            }
            Some('.') => {
                s.bump();
                row.push(None);
                any = true;
            }
            Some('{') => {
                row.push(Some(s.multiset()?));
                any = true;
            }
            Some(c) => return Err(s.err(format!("expected a cell, `|`, or `]`, found `{c}`"))),
            None => return Err(s.err("expected a cell, `|`, or `]`, found end of input")),
        }
    }
}

pub fn parse_biword(src: &str) -> Result<Biword> {
    let mut s = Scanner::new(src);
    s.skip_ws();
    s.expect('[')?;
    let mut top: Vec<Multiset> = Vec::new();
    let mut bottom: Vec<Multiset> = Vec::new();
    let mut in_top = true;
    loop {
        s.skip_ws();
        match s.peek() {
            Some('/') if in_top => {
                s.bump();
                in_top = false;
            }
            Some(']') => {
                if in_top {
                    return Err(s.err("expected `/` before `]`"));
                }
                s.bump();
                break;
            }
            Some('{') => {
                let m = s.multiset()?;
                if in_top {
                    top.push(m);
                } else {
                    bottom.push(m);
                }
            }
            Some(c) if c == '~' || c == '_' || c.is_ascii_digit() => {
                let m = Multiset::singleton(s.letter()?);
                if in_top {
                    top.push(m);
                } else {
                    bottom.push(m);
                }
            }
            Some(c) => return Err(s.err(format!("expected a letter, `/`, or `]`, found `{c}`"))),
            None => return Err(s.err("unterminated biword")),
        }
    }
    if top.len() != bottom.len() {
        return Err(s.err(format!(
            "top row has {} letters but bottom row has {}",
            top.len(),
            bottom.len()
        )));
    }
    s.finish()?;
    let letters: Vec<Biletter> = top.into_iter().zip(bottom).collect();
    Biword::new(letters)
}

fn parse_big_uint(s: &mut Scanner) -> Result<BigInt> {
    let digits = s.digits()?;
    digits
        .parse::<BigInt>()
        .map_err(|_| s.err("bad integer literal"))
}

fn parse_rational(s: &mut Scanner) -> Result<BigRational> {
    let numer = parse_big_uint(s)?;
    if s.peek() == Some('/') {
        s.bump();
        let denom = parse_big_uint(s)?;
        if denom == BigInt::from(0) {
            return Err(s.err("zero denominator"));
        }
        Ok(BigRational::new(numer, denom))
    } else {
        Ok(BigRational::from(numer))
    }
}

/// One `[coeff]x[^k]` or constant term; the sign is handled by the caller.
fn parse_poly_term(s: &mut Scanner) -> Result<CoeffPoly> {
    let coeff = match s.peek() {
        Some('(') => {
            s.bump();
            let c = parse_rational(s)?;
            s.expect(')')?;
            Some(c)
        }
        Some(c) if c.is_ascii_digit() => Some(parse_rational(s)?),
        Some('x') => None,
        Some(c) => return Err(s.err(format!("expected a term, found `{c}`"))),
        None => return Err(s.err("expected a term, found end of input")),
    };
    if s.peek() == Some('x') {
        s.bump();
        let k = if s.peek() == Some('^') {
            s.bump();
            s.digits()?
                .parse::<usize>()
                .map_err(|_| s.err("exponent does not fit a machine word"))?
        } else {
            1
        };
        Ok(CoeffPoly::monomial(k, coeff.unwrap_or_else(BigRational::one)))
    } else {
        match coeff {
            Some(c) => Ok(CoeffPoly::constant(c)),
            None => Err(s.err("expected a term")),
        }
    }
}

pub fn parse_poly(src: &str) -> Result<CoeffPoly> {
    let mut s = Scanner::new(src);
    s.skip_ws();
    let mut negate = false;
    if s.peek() == Some('-') {
        s.bump();
        s.skip_ws();
        negate = true;
    }
    let mut acc = parse_poly_term(&mut s)?;
    if negate {
        acc = CoeffPoly::zero() - acc;
    }
    loop {
        s.skip_ws();
        match s.peek() {
            None => return Ok(acc),
            Some('+') => {
                s.bump();
                s.skip_ws();
                acc = acc + parse_poly_term(&mut s)?;
            }
            Some('-') => {
                s.bump();
                s.skip_ws();
                acc = acc - parse_poly_term(&mut s)?;
            }
            Some(c) => return Err(s.err(format!("expected `+`, `-`, or end, found `{c}`"))),
        }
    }
}

/// One letter in the structured-record schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterRec {
    pub value: u32,
    pub barred: bool,
    pub underlined: bool,
}

pub fn letter_rec(l: Letter) -> LetterRec {
    LetterRec { value: l.value, barred: l.barred, underlined: l.underlined }
}

pub fn rec_letter(r: &LetterRec) -> Letter {
    match (r.barred, r.underlined) {
        (false, false) => Letter::plain(r.value),
        (true, false) => Letter::barred(r.value),
        (false, true) => Letter::und(r.value),
        (true, true) => Letter::und_barred(r.value),
    }
}

pub fn multiset_recs(m: &Multiset) -> Vec<LetterRec> {
    m.letters().iter().map(|&l| letter_rec(l)).collect()
}

pub fn partition_recs(pt: &MultisetPartition) -> Vec<Vec<LetterRec>> {
    pt.blocks().iter().map(multiset_recs).collect()
}

pub fn tableau_recs(t: &MPTableau) -> Vec<Vec<Option<Vec<LetterRec>>>> {
    t.rows()
        .iter()
        .map(|row| row.iter().map(|c| c.as_ref().map(multiset_recs)).collect())
        .collect()
}

pub fn biword_recs(w: &Biword) -> (Vec<Vec<LetterRec>>, Vec<Vec<LetterRec>>) {
    let top = w.letters().iter().map(|bl| multiset_recs(&bl.0)).collect();
    let bottom = w.letters().iter().map(|bl| multiset_recs(&bl.1)).collect();
    (top, bottom)
}
