//! Vanishing cycles of the involutions `θ1` (axis through hole `(p+1)/2`)
//! and `θ2` (axis through hole 1) on `Σ_{p+1}`, and the twist words built
//! from them.
//!
//! Every cycle is stored as a word in `α_i`, `β_i` and `γ_i = α_i α_{i+1}^{-1}`
//! exactly as written, together with its homology class. `p = 3` uses its
//! own explicit list; `p ≥ 5` uses the general families indexed by
//! `q = (p+1)/2`. Empty ascending ranges such as `β_3 ⋯ β_{m+1}` at `m = 1`
//! contribute nothing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::homology::{abelianize, HomologyClass, SurfaceGenus};
use crate::word::{GammaWord, Generator, Letter, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Theta1,
    Theta2,
}

impl Family {
    pub fn number(self) -> u32 {
        match self {
            Family::Theta1 => 1,
            Family::Theta2 => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleKind {
    C,
    B,
}

/// `c_i^f` (`i ∈ 1..=5`) or `b_m^f` (`m ∈ 0..p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleLabel {
    pub family: Family,
    pub kind: CycleKind,
    pub index: u32,
}

impl CycleLabel {
    pub const fn c(family: Family, index: u32) -> Self {
        CycleLabel { family, kind: CycleKind::C, index }
    }

    pub const fn b(family: Family, index: u32) -> Self {
        CycleLabel { family, kind: CycleKind::B, index }
    }
}

impl fmt::Display for CycleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            CycleKind::C => 'c',
            CycleKind::B => 'b',
        };
        write!(f, "{k}{}^{}", self.index, self.family.number())
    }
}

impl FromStr for CycleLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(alloc::format!("bad cycle label `{s}`"));
        let (body, fam) = s.split_once('^').ok_or_else(bad)?;
        let family = match fam {
            "1" => Family::Theta1,
            "2" => Family::Theta2,
            _ => return Err(bad()),
        };
        let mut chars = body.chars();
        let kind = match chars.next() {
            Some('c') => CycleKind::C,
            Some('b') => CycleKind::B,
            _ => return Err(bad()),
        };
        let index = chars.as_str().parse().map_err(|_| bad())?;
        Ok(CycleLabel { family, kind, index })
    }
}

/// Validated rotation order `p` (odd, `≥ 3`) with `q = (p+1)/2`, `g = p+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    p: u32,
}

impl FamilyParams {
    pub fn new(p: i64) -> Result<Self> {
        SurfaceGenus::from_p(p)?;
        Ok(FamilyParams { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        (self.p + 1) / 2
    }

    pub fn g(&self) -> u32 {
        self.p + 1
    }

    pub fn genus(&self) -> SurfaceGenus {
        SurfaceGenus::from_p(self.p as i64).expect("validated")
    }

    /// Twists in each of `θ1`, `θ2`.
    pub fn theta_len(&self) -> usize {
        self.p as usize + 9
    }

    /// Twists in the relator `φ^p`: `2p(p+9)`.
    pub fn relator_len(&self) -> usize {
        2 * self.p as usize * self.theta_len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleEntry {
    pub word: GammaWord,
    pub class: HomologyClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCatalog {
    params: FamilyParams,
    entries: BTreeMap<CycleLabel, CycleEntry>,
}

impl CycleCatalog {
    pub fn params(&self) -> FamilyParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &CycleLabel) -> Option<&CycleEntry> {
        self.entries.get(label)
    }

    pub fn word(&self, label: CycleLabel) -> Result<&GammaWord> {
        self.get(&label).map(|e| &e.word).ok_or(Error::UnknownLabel(label))
    }

    /// Entries in label order: family, then `b` before `c`, then index.
    pub fn iter(&self) -> impl Iterator<Item = (&CycleLabel, &CycleEntry)> {
        self.entries.iter()
    }

    /// Homology classes of a twist word, in application order.
    pub fn resolve(&self, w: &TwistWord) -> Result<Vec<&HomologyClass>> {
        w.labels()
            .iter()
            .map(|l| self.get(l).map(|e| &e.class).ok_or(Error::UnknownLabel(*l)))
            .collect()
    }

    /// A copy with one cycle's word replaced (class recomputed). Used to
    /// probe what the checks do with a deliberately wrong catalog.
    pub fn with_word(&self, label: CycleLabel, word: GammaWord) -> Result<Self> {
        if !self.entries.contains_key(&label) {
            return Err(Error::UnknownLabel(label));
        }
        let class = abelianize(&word, self.params.genus())?;
        let mut out = self.clone();
        out.entries.insert(label, CycleEntry { word, class });
        Ok(out)
    }
}

// word assembly helpers; all words are listed as written

#[derive(Default)]
struct W(Vec<Letter<Symbol>>);

impl W {
    fn a(mut self, i: u32) -> Self {
        self.0.push(Letter::new(Symbol::Gen(Generator::alpha(i)), false));
        self
    }
    fn ai(mut self, i: u32) -> Self {
        self.0.push(Letter::new(Symbol::Gen(Generator::alpha(i)), true));
        self
    }
    fn b(mut self, i: u32) -> Self {
        self.0.push(Letter::new(Symbol::Gen(Generator::beta(i)), false));
        self
    }
    fn bi(mut self, i: u32) -> Self {
        self.0.push(Letter::new(Symbol::Gen(Generator::beta(i)), true));
        self
    }
    fn g(mut self, i: u32) -> Self {
        self.0.push(Letter::new(Symbol::Gamma(i), false));
        self
    }
    fn gi(mut self, i: u32) -> Self {
        self.0.push(Letter::new(Symbol::Gamma(i), true));
        self
    }
    /// `β_lo β_{lo+1} ⋯ β_hi`, empty when `hi < lo`.
    fn b_up(self, lo: u32, hi: u32) -> Self {
        (lo..=hi).fold(self, W::b)
    }
    /// `γ_lo γ_{lo+1} ⋯ γ_hi`.
    fn g_up(self, lo: u32, hi: u32) -> Self {
        (lo..=hi).fold(self, W::g)
    }
    /// `β_{hi+1}^{-1} γ_hi^{-1} β_hi^{-1} γ_{hi-1}^{-1} ⋯ β_3^{-1} γ_2^{-1}`.
    fn tail_bg(self, hi: u32) -> Self {
        (2..=hi).rev().fold(self, |w, j| w.bi(j + 1).gi(j))
    }
    /// `γ_hi^{-1} β_hi^{-1} γ_{hi-1}^{-1} ⋯ β_lo^{-1} γ_{lo-1}^{-1}`.
    fn tail_gb(self, hi: u32, lo: u32) -> Self {
        (lo..=hi).rev().fold(self.gi(hi), |w, j| w.bi(j).gi(j - 1))
    }
    fn done(self) -> GammaWord {
        GammaWord::free_reduce(self.0)
    }
}

fn w() -> W {
    W::default()
}

fn words_p3() -> Vec<(CycleLabel, GammaWord)> {
    use Family::*;
    let b0 = || w().bi(4).bi(3).bi(2).bi(1).done();
    alloc::vec![
        (CycleLabel::c(Theta1, 1), w().a(1).done()),
        (CycleLabel::c(Theta1, 2), w().b(1).done()),
        (CycleLabel::c(Theta1, 3), w().g(1).done()),
        (CycleLabel::c(Theta1, 4), w().b(2).done()),
        (CycleLabel::c(Theta1, 5), w().b(3).ai(3).bi(3).gi(2).done()),
        (CycleLabel::b(Theta1, 0), b0()),
        (CycleLabel::b(Theta1, 1), w().a(3).bi(4).gi(3).bi(3).gi(2).done()),
        (CycleLabel::b(Theta1, 2), w().b(3).a(3).gi(3).bi(3).gi(2).done()),
        (CycleLabel::c(Theta2, 1), w().a(3).done()),
        (CycleLabel::c(Theta2, 2), w().b(3).done()),
        (CycleLabel::c(Theta2, 3), w().g(2).done()),
        (CycleLabel::c(Theta2, 4), w().b(2).done()),
        (CycleLabel::c(Theta2, 5), w().gi(1).bi(1).a(1).b(1).done()),
        (CycleLabel::b(Theta2, 0), b0()),
        (
            CycleLabel::b(Theta2, 1),
            w().g(1).b(2).b(3).bi(4).gi(3).bi(3).gi(2).bi(2).gi(1).bi(1).a(1).done(),
        ),
        (
            CycleLabel::b(Theta2, 2),
            w().g(1).b(2).b(3).gi(3).bi(3).gi(2).bi(2).gi(1).bi(1).a(1).b(1).done(),
        ),
    ]
}

fn words_general(p: u32) -> Vec<(CycleLabel, GammaWord)> {
    use Family::*;
    let q = (p + 1) / 2;
    let b0 = || (1..=p + 1).rev().fold(w(), W::bi).done();
    let mut out = alloc::vec![
        (CycleLabel::c(Theta1, 1), w().a(1).done()),
        (CycleLabel::c(Theta1, 2), w().b(1).done()),
        (CycleLabel::c(Theta1, 3), w().g(1).done()),
        (CycleLabel::c(Theta1, 4), w().b(2).done()),
        (CycleLabel::c(Theta1, 5), w().b_up(3, q + 1).ai(q + 1).tail_bg(q).done()),
        (CycleLabel::b(Theta1, 0), b0()),
        (CycleLabel::b(Theta1, 1), w().a(3).tail_bg(p).done()),
    ];
    for m in 1..q {
        out.push((
            CycleLabel::b(Theta1, 2 * m),
            w().b_up(3, m + 2).a(m + 2).gi(p - m + 1).tail_bg(p - m).done(),
        ));
    }
    for m in 2..q {
        out.push((CycleLabel::b(Theta1, 2 * m - 1), w().b_up(3, m + 1).a(m + 2).tail_bg(p - m + 1).done()));
    }

    // common suffix β_{p+1}^{-1} γ_p^{-1} β_p^{-1} ⋯ γ_1^{-1} β_1^{-1} α_1
    let suffix = |w: W| w.bi(p + 1).tail_gb(p, 2).bi(1).a(1);
    out.extend([
        (CycleLabel::c(Theta2, 1), w().a(q + 1).done()),
        (CycleLabel::c(Theta2, 2), w().b(q + 1).done()),
        (CycleLabel::c(Theta2, 3), w().b_up(3, q).tail_gb(q, 3).done()),
        (CycleLabel::c(Theta2, 4), w().b(2).done()),
        (CycleLabel::c(Theta2, 5), w().gi(1).bi(1).a(1).b(1).done()),
        (CycleLabel::b(Theta2, 0), b0()),
        (
            CycleLabel::b(Theta2, p - 1),
            w().g(1).b_up(2, p).tail_gb(p, 2).bi(1).a(1).b(1).done(),
        ),
        (CycleLabel::b(Theta2, p - 2), suffix(w().g(1).b_up(2, p)).done()),
    ]);
    for m in 1..q - 1 {
        out.push((
            CycleLabel::b(Theta2, 2 * m - 1),
            suffix(w().tail_bg(q - m).b_up(2, q + m).g_up(q + m + 1, p)).done(),
        ));
        out.push((
            CycleLabel::b(Theta2, 2 * m),
            suffix(w().tail_gb(q - m, 3).b_up(2, q + m + 1).g_up(q + m + 1, p)).done(),
        ));
    }
    out
}

pub fn build_catalog(p: i64) -> Result<CycleCatalog> {
    let params = FamilyParams::new(p)?;
    let genus = params.genus();
    let words = if params.p() == 3 { words_p3() } else { words_general(params.p()) };
    let mut entries = BTreeMap::new();
    for (label, word) in words {
        let class = abelianize(&word, genus)?;
        entries.insert(label, CycleEntry { word, class });
    }
    debug_assert_eq!(entries.len(), 2 * (params.p() as usize + 5));
    Ok(CycleCatalog { params, entries })
}

/// Labels in application order: position 0 is the first twist applied.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TwistWord(Vec<CycleLabel>);

impl TwistWord {
    pub fn new(labels: Vec<CycleLabel>) -> Self {
        TwistWord(labels)
    }

    pub fn labels(&self) -> &[CycleLabel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` applied first, then `next`.
    pub fn then(&self, next: &TwistWord) -> TwistWord {
        TwistWord(self.0.iter().chain(next.0.iter()).copied().collect())
    }

    pub fn repeat(&self, n: usize) -> TwistWord {
        TwistWord(self.0.repeat(n))
    }
}

impl fmt::Display for TwistWord {
    /// Written form: last-applied twist leftmost.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `θ_f = c4 c3 c2 c1 b0 c1 c2 c3 c4 b1 ⋯ b_{p-1} c5` as written, so `c5`
/// is applied first and the final `c4` last.
pub fn theta_word(p: i64, family: Family) -> Result<TwistWord> {
    let params = FamilyParams::new(p)?;
    let c = |i| CycleLabel::c(family, i);
    let b = |i| CycleLabel::b(family, i);
    let mut labels = Vec::with_capacity(params.theta_len());
    labels.push(c(5));
    labels.extend((1..params.p()).rev().map(b));
    labels.extend([c(4), c(3), c(2), c(1), b(0), c(1), c(2), c(3), c(4)]);
    Ok(TwistWord(labels))
}

/// `φ = θ2 θ1`: the `θ1` block is applied first.
pub fn phi_word(p: i64) -> Result<TwistWord> {
    Ok(theta_word(p, Family::Theta1)?.then(&theta_word(p, Family::Theta2)?))
}

/// `φ^p`, of length `2p(p+9)`.
pub fn phi_relator(p: i64) -> Result<TwistWord> {
    let params = FamilyParams::new(p)?;
    Ok(phi_word(p)?.repeat(params.p() as usize))
}

/// Parameters of the glued involution on `Σ_{h+k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneralInvolutionSpec {
    pub h: u32,
    pub k: u32,
    pub i: u32,
}

/// Curve names of the glued involution's own numbering, unrelated to the
/// catalog labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbstractLabel {
    C(u32),
    B(u32),
}

impl fmt::Display for AbstractLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbstractLabel::C(i) => write!(f, "c{i}"),
            AbstractLabel::B(i) => write!(f, "b{i}"),
        }
    }
}

/// The involution as written (last-applied leftmost):
///
/// `c_{2i+2}⋯c_{2h} c_{2h+1} c_{2i}⋯c_2 c_1 b_0 c_{2h+1} c_{2h}⋯c_{2i+2}
/// c_1 c_2⋯c_{2i} b_1 b_2⋯b_k c_{2i+1}`
///
/// of length `4h + k + 2` for `i < h`, and `4h + k + 4` when `i = h`.
pub fn general_involution_word(spec: GeneralInvolutionSpec) -> Result<Vec<AbstractLabel>> {
    let GeneralInvolutionSpec { h, k, i } = spec;
    if h == 0 || k < 2 || k % 2 != 0 || i > h {
        return Err(Error::InvalidInvolutionSpec { h, k, i });
    }
    use AbstractLabel::{B, C};
    let mut out = Vec::with_capacity((4 * h + k + 2) as usize);
    out.extend((2 * i + 2..=2 * h).map(C));
    out.push(C(2 * h + 1));
    out.extend((1..=2 * i).rev().map(C));
    out.push(B(0));
    out.push(C(2 * h + 1));
    out.extend((2 * i + 2..=2 * h).rev().map(C));
    out.extend((1..=2 * i).map(C));
    out.extend((1..=k).map(B));
    out.push(C(2 * i + 1));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::is_null_homologous;
    use alloc::string::ToString;

    fn gw(s: &str) -> GammaWord {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_bad_p() {
        for p in [-1, 0, 1, 2, 4, 10] {
            assert_eq!(build_catalog(p), Err(Error::InvalidP(p)));
            assert!(theta_word(p, Family::Theta1).is_err());
            assert!(phi_relator(p).is_err());
        }
    }

    #[test]
    fn explicit_words() {
        let cat = build_catalog(3).unwrap();
        assert_eq!(cat.word(CycleLabel::c(Family::Theta1, 5)).unwrap(), &gw("b3 a3^-1 b3^-1 g2^-1"));
        let cat5 = build_catalog(5).unwrap();
        assert_eq!(
            cat5.word(CycleLabel::b(Family::Theta1, 1)).unwrap(),
            &gw("a3 b6^-1 g5^-1 b5^-1 g4^-1 b4^-1 g3^-1 b3^-1 g2^-1")
        );
        assert_eq!(
            cat5.word(CycleLabel::c(Family::Theta1, 5)).unwrap(),
            &gw("b3 b4 a4^-1 b4^-1 g3^-1 b3^-1 g2^-1")
        );
        assert_eq!(cat5.word(CycleLabel::c(Family::Theta2, 3)).unwrap(), &gw("b3 g3^-1 b3^-1 g2^-1"));
        assert_eq!(
            cat5.word(CycleLabel::b(Family::Theta2, 1)).unwrap(),
            &gw("b3^-1 g2^-1 b2 b3 b4 g5 b6^-1 g5^-1 b5^-1 g4^-1 b4^-1 g3^-1 b3^-1 g2^-1 b2^-1 g1^-1 b1^-1 a1")
        );
        assert_eq!(
            cat5.word(CycleLabel::b(Family::Theta2, 2)).unwrap(),
            &gw("g2^-1 b2 b3 b4 b5 g5 b6^-1 g5^-1 b5^-1 g4^-1 b4^-1 g3^-1 b3^-1 g2^-1 b2^-1 g1^-1 b1^-1 a1")
        );
    }

    #[test]
    fn b0_class_is_minus_all_betas() {
        for p in [3, 5, 7, 9] {
            let cat = build_catalog(p).unwrap();
            let g = cat.params().g() as usize;
            for f in [Family::Theta1, Family::Theta2] {
                let c = &cat.get(&CycleLabel::b(f, 0)).unwrap().class;
                assert!(c.coeffs()[..g].iter().all(|&x| x == 0));
                assert!(c.coeffs()[g..].iter().all(|&x| x == -1));
            }
        }
    }

    #[test]
    fn catalog_shape() {
        for p in [3, 5, 7, 9, 11, 13] {
            let cat = build_catalog(p).unwrap();
            let params = cat.params();
            assert_eq!(cat.len(), 2 * (p as usize + 5));
            for (label, e) in cat.iter() {
                assert!(!e.class.is_zero(), "{label} separating at p={p}");
                assert!(!is_null_homologous(&e.word, params.genus()).unwrap());
            }
            let t1 = theta_word(p, Family::Theta1).unwrap();
            let t2 = theta_word(p, Family::Theta2).unwrap();
            assert_eq!(t1.len(), p as usize + 9);
            assert_eq!(t2.len(), p as usize + 9);
            assert!(cat.resolve(&t1).is_ok() && cat.resolve(&t2).is_ok());
            assert_eq!(phi_relator(p).unwrap().len(), 2 * p as usize * (p as usize + 9));
        }
    }

    #[test]
    fn general_b_formulas_specialize_to_b1() {
        // the odd family b_{2m-1}^1 evaluated at m = 1 is the separately listed b_1^1
        for p in [5u32, 7, 9, 11] {
            let m = 1;
            let generic = w().b_up(3, m + 1).a(m + 2).tail_bg(p - m + 1).done();
            let cat = build_catalog(p as i64).unwrap();
            assert_eq!(&generic, cat.word(CycleLabel::b(Family::Theta1, 1)).unwrap());
        }
        // and the p = 3 list has the p ≥ 5 shape for the b^1 family
        let generic3 = w().b_up(3, 3).a(3).gi(3).tail_bg(2).done();
        let cat3 = build_catalog(3).unwrap();
        assert_eq!(&generic3, cat3.word(CycleLabel::b(Family::Theta1, 2)).unwrap());
    }

    #[test]
    fn theta_word_order() {
        let t = theta_word(3, Family::Theta1).unwrap();
        assert_eq!(t.labels()[0], CycleLabel::c(Family::Theta1, 5));
        assert_eq!(*t.labels().last().unwrap(), CycleLabel::c(Family::Theta1, 4));
        assert_eq!(t.to_string(), "c4^1 c3^1 c2^1 c1^1 b0^1 c1^1 c2^1 c3^1 c4^1 b1^1 b2^1 c5^1");
        assert_eq!(theta_word(5, Family::Theta2).unwrap().len(), 14);
        assert_eq!(theta_word(9, Family::Theta1).unwrap().len(), 18);
        let r = phi_relator(3).unwrap();
        assert_eq!(r.len(), 72);
        assert_eq!(r.labels()[0], CycleLabel::c(Family::Theta1, 5));
        assert_eq!(r.labels()[12], CycleLabel::c(Family::Theta2, 5));
        assert_eq!(phi_relator(5).unwrap().len(), 140);
        assert_eq!(phi_relator(7).unwrap().len(), 224);
    }

    #[test]
    fn label_text() {
        let l = CycleLabel::b(Family::Theta2, 11);
        assert_eq!(l.to_string(), "b11^2");
        assert_eq!("b11^2".parse::<CycleLabel>().unwrap(), l);
        assert!("d1^1".parse::<CycleLabel>().is_err());
        assert!("c1^3".parse::<CycleLabel>().is_err());
    }

    #[test]
    fn involution_pattern() {
        // h = 2, k = p − 1 has the θ-word length p + 9
        for p in [3u32, 5, 7, 9] {
            for i in [0, 1] {
                let w = general_involution_word(GeneralInvolutionSpec { h: 2, k: p - 1, i }).unwrap();
                assert_eq!(w.len(), p as usize + 9);
            }
        }
        // i = h empties both c-blocks
        let w = general_involution_word(GeneralInvolutionSpec { h: 2, k: 2, i: 2 }).unwrap();
        assert_eq!(w.len(), 4 * 2 + 2 + 4);
        let w = general_involution_word(GeneralInvolutionSpec { h: 1, k: 2, i: 0 }).unwrap();
        let text: Vec<_> = w.iter().map(|l| l.to_string()).collect();
        assert_eq!(text, ["c2", "c3", "b0", "c3", "c2", "b1", "b2", "c1"]);
        let w = general_involution_word(GeneralInvolutionSpec { h: 3, k: 4, i: 1 }).unwrap();
        assert_eq!(w.len(), 4 * 3 + 4 + 2);
        assert!(general_involution_word(GeneralInvolutionSpec { h: 2, k: 3, i: 0 }).is_err());
        assert!(general_involution_word(GeneralInvolutionSpec { h: 2, k: 4, i: 3 }).is_err());
    }
}
