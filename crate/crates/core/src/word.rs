//! Freely reduced words on the standard generators `α_i`, `β_i` of `π1(Σ_g)`.
//!
//! Words are stored in the order they are written: `letters()[0]` is the
//! leftmost letter. Catalog words are written right to left in the sense of
//! traversal, so the first letter traversed is the last one stored. The
//! group product is plain juxtaposition of the written forms, which is how
//! relations between vanishing cycles are manipulated.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Alpha,
    Beta,
}

/// A standard generator `α_i` or `β_i`, `i ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GenKind,
    pub index: u32,
}

impl Generator {
    pub const fn alpha(index: u32) -> Self {
        Generator { kind: GenKind::Alpha, index }
    }

    pub const fn beta(index: u32) -> Self {
        Generator { kind: GenKind::Beta, index }
    }
}

/// A generator or the macro `γ_i = α_i α_{i+1}^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Gen(Generator),
    Gamma(u32),
}

impl From<Generator> for Symbol {
    fn from(g: Generator) -> Self {
        Symbol::Gen(g)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::Alpha => write!(f, "a{}", self.index),
            GenKind::Beta => write!(f, "b{}", self.index),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Gen(g) => g.fmt(f),
            Symbol::Gamma(i) => write!(f, "g{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter<S> {
    pub symbol: S,
    pub inverse: bool,
}

impl<S: Copy + Eq> Letter<S> {
    pub fn new(symbol: S, inverse: bool) -> Self {
        Letter { symbol, inverse }
    }

    pub fn inverted(self) -> Self {
        Letter { symbol: self.symbol, inverse: !self.inverse }
    }

    fn cancels(&self, other: &Self) -> bool {
        self.symbol == other.symbol && self.inverse != other.inverse
    }

    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word: no adjacent `x x^{-1}` or `x^{-1} x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word<S> {
    letters: Vec<Letter<S>>,
}

/// Words in the generators only.
pub type FreeWord = Word<Generator>;
/// Words that may still contain `γ` macros.
pub type GammaWord = Word<Symbol>;

impl<S: Copy + Eq> Default for Word<S> {
    fn default() -> Self {
        Word { letters: Vec::new() }
    }
}

impl<S: Copy + Eq> Word<S> {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn free_reduce<I: IntoIterator<Item = Letter<S>>>(letters: I) -> Self {
        let mut out: Vec<Letter<S>> = Vec::new();
        for l in letters {
            match out.last() {
                Some(last) if last.cancels(&l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    pub fn letter(symbol: S) -> Self {
        Word { letters: alloc::vec![Letter::new(symbol, false)] }
    }

    pub fn letter_inv(symbol: S) -> Self {
        Word { letters: alloc::vec![Letter::new(symbol, true)] }
    }

    pub fn letters(&self) -> &[Letter<S>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn invert(&self) -> Self {
        Word { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self::free_reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// `h · self · h^{-1}`, reduced.
    pub fn conjugate(&self, h: &Self) -> Self {
        h.concat(self).concat(&h.invert())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = Self::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Exponent sum of `symbol` in the word.
    pub fn exponent_sum(&self, symbol: S) -> i64 {
        self.letters.iter().filter(|l| l.symbol == symbol).map(Letter::exponent).sum()
    }

    /// Splits the word as `a · core · a^{-1}` with `core` cyclically reduced.
    pub fn cyclic_decomposition(&self) -> (Self, Self) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].cancels(&self.letters[n - 1 - k]) {
            k += 1;
        }
        let prefix = Word { letters: self.letters[..k].to_vec() };
        let core = Word { letters: self.letters[k..n - k].to_vec() };
        (prefix, core)
    }

    /// Finds `h` with `self = h · other · h^{-1}`, if the two are conjugate.
    pub fn conjugator_to(&self, other: &Self) -> Option<Self> {
        let (a, u) = self.cyclic_decomposition();
        let (b, v) = other.cyclic_decomposition();
        if u.len() != v.len() {
            return None;
        }
        if u.is_empty() {
            return Some(a.concat(&b.invert()));
        }
        let n = v.len();
        for r in 0..n {
            let rotated = v.letters[r..].iter().chain(v.letters[..r].iter());
            if rotated.zip(u.letters.iter()).all(|(x, y)| x == y) {
                // v = x y, u = y x = x^{-1} v x with x = v[..r]
                let x = Word { letters: v.letters[..r].to_vec() };
                return Some(a.concat(&x.invert()).concat(&b.invert()));
            }
        }
        None
    }

    /// Deletes every letter whose symbol satisfies `kill` and reduces; the
    /// image of the word in the quotient where those symbols are trivial.
    pub fn kill<F: Fn(S) -> bool>(&self, kill: F) -> Self {
        Self::free_reduce(self.letters.iter().copied().filter(|l| !kill(l.symbol)))
    }

    pub fn map_symbols<T: Copy + Eq, F: Fn(S) -> T>(&self, f: F) -> Word<T> {
        Word::free_reduce(self.letters.iter().map(|l| Letter::new(f(l.symbol), l.inverse)))
    }
}

impl From<FreeWord> for GammaWord {
    fn from(w: FreeWord) -> Self {
        w.map_symbols(Symbol::Gen)
    }
}

/// Replaces every `γ_i^{±1}` by `(α_i α_{i+1}^{-1})^{±1}` and reduces.
pub fn expand_gammas(w: &GammaWord, p: u32) -> Result<FreeWord> {
    let mut out = Vec::with_capacity(w.len() * 2);
    for l in w.letters() {
        match l.symbol {
            Symbol::Gen(g) => out.push(Letter::new(g, l.inverse)),
            Symbol::Gamma(i) => {
                if i == 0 || i > p {
                    return Err(Error::IndexOutOfRange { symbol: 'g', index: i, max: p });
                }
                let a = Letter::new(Generator::alpha(i), false);
                let b = Letter::new(Generator::alpha(i + 1), true);
                if l.inverse {
                    out.push(b.inverted());
                    out.push(a.inverted());
                } else {
                    out.push(a);
                    out.push(b);
                }
            }
        }
    }
    Ok(Word::free_reduce(out))
}

impl<S: Copy + Eq + fmt::Display> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.symbol)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

fn parse_letter(tok: &str) -> Result<Letter<Symbol>> {
    let bad = || Error::Parse(alloc::format!("bad letter `{tok}`"));
    let (body, inverse) = match tok.split_once('^') {
        Some((b, "-1")) => (b, true),
        Some((b, "1")) => (b, false),
        Some(_) => return Err(bad()),
        None => (tok, false),
    };
    let mut chars = body.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let index: u32 = chars.as_str().parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    let symbol = match kind {
        'a' => Symbol::Gen(Generator::alpha(index)),
        'b' => Symbol::Gen(Generator::beta(index)),
        'g' => Symbol::Gamma(index),
        _ => return Err(bad()),
    };
    Ok(Letter::new(symbol, inverse))
}

impl FromStr for GammaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::empty());
        }
        let letters = s.split_whitespace().map(parse_letter).collect::<Result<Vec<_>>>()?;
        Ok(Word::free_reduce(letters))
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w: GammaWord = s.parse()?;
        let mut out = Vec::with_capacity(w.len());
        for l in w.letters() {
            match l.symbol {
                Symbol::Gen(g) => out.push(Letter::new(g, l.inverse)),
                Symbol::Gamma(_) => {
                    return Err(Error::Parse(alloc::format!("`{s}` contains a γ macro")))
                }
            }
        }
        Ok(Word::free_reduce(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn fw(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn gw(s: &str) -> GammaWord {
        s.parse().unwrap()
    }

    fn raw(s: &str) -> Vec<Letter<Generator>> {
        s.split_whitespace()
            .map(|t| {
                let l = parse_letter(t).unwrap();
                match l.symbol {
                    Symbol::Gen(g) => Letter::new(g, l.inverse),
                    Symbol::Gamma(_) => unreachable!(),
                }
            })
            .collect()
    }

    #[test]
    fn free_reduce_cancels() {
        assert!(FreeWord::free_reduce(raw("a1 a1^-1")).is_empty());
        let w = FreeWord::free_reduce(raw("a3 b4^-1 b4 a3^-1 b3^-1"));
        assert_eq!(w, fw("b3^-1"));
        let r = fw("a1 b2 a1^-1 b2^-1");
        assert_eq!(FreeWord::free_reduce(r.letters().iter().copied()), r);
    }

    #[test]
    fn invert_and_concat() {
        assert_eq!(fw("a1 b2").invert(), fw("b2^-1 a1^-1"));
        assert!(FreeWord::empty().invert().is_empty());
        assert!(fw("a1").concat(&fw("a1^-1")).is_empty());
        assert_eq!(fw("a3 b6^-1").concat(&fw("b6 a3^-1 b3^-1")), fw("b3^-1"));
        assert_eq!(fw("a2 b1").concat(&FreeWord::empty()), fw("a2 b1"));
    }

    #[test]
    fn conjugation_matches_beta_relation() {
        // β_{m+2} = α_{m+2} β_{p-m+2}^{-1} α_{m+2}^{-1} at m = 1, p = 5
        let c = fw("b6^-1").conjugate(&fw("a3"));
        assert_eq!(c, fw("a3 b6^-1 a3^-1"));
        assert_eq!(fw("a1 b1").conjugate(&FreeWord::empty()), fw("a1 b1"));
    }

    #[test]
    fn gamma_expansion() {
        assert_eq!(expand_gammas(&gw("g2^-1"), 3).unwrap(), fw("a3 a2^-1"));
        assert_eq!(expand_gammas(&gw("g2 g3 g4 g5"), 7).unwrap(), fw("a2 a6^-1"));
        assert_eq!(expand_gammas(&gw("g5^-1 g4^-1 g3^-1 g2^-1"), 7).unwrap(), fw("a6 a2^-1"));
        assert_eq!(
            expand_gammas(&gw("g4"), 3),
            Err(Error::IndexOutOfRange { symbol: 'g', index: 4, max: 3 })
        );
    }

    #[test]
    fn telescoping_for_all_ranges() {
        for p in 2..=15u32 {
            for i in 1..=p {
                for j in i + 1..=p {
                    let up = GammaWord::free_reduce((i..=j).map(|t| Letter::new(Symbol::Gamma(t), false)));
                    let expected = FreeWord::free_reduce([
                        Letter::new(Generator::alpha(i), false),
                        Letter::new(Generator::alpha(j + 1), true),
                    ]);
                    assert_eq!(expand_gammas(&up, p).unwrap(), expected);
                    assert_eq!(expand_gammas(&up.invert(), p).unwrap(), expected.invert());
                }
            }
        }
    }

    #[test]
    fn text_form_round_trip() {
        let w = gw("a3 b4^-1 g2^-1");
        assert_eq!(w.to_string(), "a3 b4^-1 g2^-1");
        assert_eq!(FreeWord::empty().to_string(), "1");
        assert!("a3 g1".parse::<FreeWord>().is_err());
        assert!("x3".parse::<GammaWord>().is_err());
        assert!("a0".parse::<GammaWord>().is_err());
        assert!("a1^2".parse::<GammaWord>().is_err());
    }

    #[test]
    fn conjugator_search() {
        let v = fw("b3 a3 b4 a3^-1");
        let h = fw("b3 b2 a1^-1");
        let u = v.conjugate(&h);
        let found = u.conjugator_to(&v).unwrap();
        assert_eq!(v.conjugate(&found), u);
        assert!(fw("a1 a2").conjugator_to(&fw("a1 a1")).is_none());
        assert_eq!(FreeWord::empty().conjugator_to(&FreeWord::empty()), Some(FreeWord::empty()));
    }

    fn arb_word() -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((any::<bool>(), 1u32..5, any::<bool>()), 0..24).prop_map(|v| {
            FreeWord::free_reduce(v.into_iter().map(|(a, i, inv)| {
                let g = if a { Generator::alpha(i) } else { Generator::beta(i) };
                Letter::new(g, inv)
            }))
        })
    }

    proptest! {
        #[test]
        fn reduce_idempotent(w in arb_word()) {
            let again = FreeWord::free_reduce(w.letters().iter().copied());
            prop_assert_eq!(&again, &w);
        }

        #[test]
        fn inverse_laws(w in arb_word()) {
            prop_assert!(w.concat(&w.invert()).is_empty());
            prop_assert_eq!(w.invert().invert(), w);
        }

        #[test]
        fn exponent_sums_additive(u in arb_word(), v in arb_word(), h in arb_word()) {
            for g in [Generator::alpha(1), Generator::beta(2), Generator::alpha(4)] {
                prop_assert_eq!(u.concat(&v).exponent_sum(g), u.exponent_sum(g) + v.exponent_sum(g));
                prop_assert_eq!(u.invert().exponent_sum(g), -u.exponent_sum(g));
                prop_assert_eq!(u.conjugate(&h).exponent_sum(g), u.exponent_sum(g));
            }
        }

        #[test]
        fn concat_associative(u in arb_word(), v in arb_word(), w in arb_word()) {
            prop_assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
        }

        #[test]
        fn conjugator_recovers_conjugate(u in arb_word(), h in arb_word()) {
            let c = u.conjugate(&h);
            let k = c.conjugator_to(&u).expect("conjugate words must be detected");
            prop_assert_eq!(u.conjugate(&k), c);
        }

        #[test]
        fn text_round_trip(w in arb_word()) {
            prop_assert_eq!(w.to_string().parse::<FreeWord>().unwrap(), w);
        }
    }
}
