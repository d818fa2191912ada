//! Free-group certificate that the vanishing cycles normally generate
//! `π1(Σ_{p+1})`.
//!
//! Every step is a free reduction or a conjugacy test between explicit words.
//! Pairs of `b` cycles give conjugation relations between `β` generators,
//! the odd `b` cycles collapse to products `α_i α_j` once the `β`s are gone,
//! and the single-generator cycles seed the elimination.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::{CycleCatalog, CycleLabel, Family};
use crate::error::Result;
use crate::homology::abelianize;
use crate::invariants::h1_from_classes;
use crate::word::{expand_gammas, FreeWord, GenKind, Generator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub name: String,
    pub ok: bool,
    /// `h` with `derived = h · expected · h^{-1}`, when one was needed.
    pub conjugator: Option<FreeWord>,
    pub detail: String,
}

/// One link of an elimination chain: `killed` dies because `via` is already
/// trivial and `relation` ties the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink {
    pub killed: Generator,
    pub via: Generator,
    pub relation: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub seed: Vec<Generator>,
    pub links: Vec<ChainLink>,
    /// Generators the chain was required to kill but did not reach.
    pub stalled: Vec<Generator>,
}

impl Chain {
    pub fn complete(&self) -> bool {
        self.stalled.is_empty()
    }
}

/// Conjugacy classes `{β_j, β_{p+4−j}^{-1}, β_{p+3−j}^{-1}}`, `3 ≤ j ≤ q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleRow {
    pub beta: Generator,
    pub first: Generator,
    pub second: Generator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationReport {
    pub p: u32,
    pub steps: Vec<DerivationStep>,
    /// Generators left after the single-generator cycles are cancelled.
    pub remaining: Vec<Generator>,
    pub triples: Vec<TripleRow>,
    /// `β` elimination seeded by `β_{q+1} = 1`.
    pub beta_chain: Chain,
    /// `β` elimination seeded by `β_{p+1} = 1` instead.
    pub beta_chain_alt: Chain,
    pub alpha_chain: Chain,
    /// The `α` chain uses the two families of product relations in turn.
    pub alpha_alternates: bool,
}

impl DerivationReport {
    pub fn ok(&self) -> bool {
        self.steps.iter().all(|s| s.ok)
            && self.beta_chain.complete()
            && self.beta_chain_alt.complete()
            && self.alpha_chain.complete()
            && self.alpha_alternates
    }

    pub fn failures(&self) -> impl Iterator<Item = &DerivationStep> {
        self.steps.iter().filter(|s| !s.ok)
    }
}

fn a(i: u32) -> Generator {
    Generator::alpha(i)
}

fn b(i: u32) -> Generator {
    Generator::beta(i)
}

fn gen(g: Generator) -> FreeWord {
    FreeWord::letter(g)
}

fn gen_inv(g: Generator) -> FreeWord {
    FreeWord::letter_inv(g)
}

fn betas(lo: u32, hi: u32) -> FreeWord {
    (lo..=hi).fold(FreeWord::empty(), |w, i| w.concat(&gen(b(i))))
}

/// `lhs · rhs^{-1}`, the relator of `lhs = rhs`.
fn relator(lhs: &FreeWord, rhs: &FreeWord) -> FreeWord {
    lhs.concat(&rhs.invert())
}

struct Checker<'a> {
    cat: &'a CycleCatalog,
    p: u32,
    q: u32,
    steps: Vec<DerivationStep>,
}

impl<'a> Checker<'a> {
    fn word(&self, label: CycleLabel) -> Result<FreeWord> {
        expand_gammas(self.cat.word(label)?, self.p)
    }

    fn b1(&self, m: u32) -> Result<FreeWord> {
        self.word(CycleLabel::b(Family::Theta1, m))
    }

    fn b2(&self, m: u32) -> Result<FreeWord> {
        self.word(CycleLabel::b(Family::Theta2, m))
    }

    fn push(&mut self, name: String, ok: bool, conjugator: Option<FreeWord>, detail: String) -> bool {
        self.steps.push(DerivationStep { name, ok, conjugator, detail });
        ok
    }

    /// Records whether `derived` is a conjugate of `expected`.
    fn conjugacy_step(&mut self, name: String, derived: &FreeWord, expected: &FreeWord) -> bool {
        match derived.conjugator_to(expected) {
            Some(h) => {
                let detail = format!("{derived} = h ({expected}) h^-1");
                let h = (!h.is_empty()).then_some(h);
                self.push(name, true, h, detail)
            }
            None => {
                let detail = format!("derived {derived} is not conjugate to {expected}");
                self.push(name, false, None, detail)
            }
        }
    }

    fn equality_step(&mut self, name: String, derived: &FreeWord, expected: &FreeWord) -> bool {
        let ok = derived == expected;
        let detail = if ok {
            format!("{derived}")
        } else {
            format!("derived {derived}, expected {expected}")
        };
        self.push(name, ok, None, detail)
    }

    /// `β_{m+2} = α_{m+2} β_{p−m+2}^{-1} α_{m+2}^{-1}` from `b_{2m}^1`, `b_{2m−1}^1`.
    fn beta_conjugation_theta1(&mut self, m: u32) -> Result<bool> {
        let derived = self.b2m_over_b2m1(Family::Theta1, m)?;
        let x = gen(a(m + 2));
        let rhs = gen_inv(b(self.p - m + 2)).conjugate(&x);
        let expected = relator(&gen(b(m + 2)), &rhs);
        Ok(self.conjugacy_step(format!("beta-conjugation theta1 m={m}"), &derived, &expected))
    }

    /// `β_{1+q−m} = W β_{q+m+1}^{-1} W^{-1}` from `b_{2m−1}^2`, `b_{2m}^2`, with
    /// `W = γ_{q−m}^{-1} β_{q−m}^{-1} ⋯ β_3^{-1} γ_2^{-1} β_2 ⋯ β_{q+m}`.
    fn beta_conjugation_theta2(&mut self, m: u32) -> Result<bool> {
        let q = self.q;
        let derived = self.b2m_over_b2m1(Family::Theta2, m)?;
        let mut w = self.gamma_inv(q - m);
        for j in (3..=q - m).rev() {
            w = w.concat(&gen_inv(b(j))).concat(&self.gamma_inv(j - 1));
        }
        let w = w.concat(&betas(2, q + m));
        let rhs = gen_inv(b(q + m + 1)).conjugate(&w);
        let expected = relator(&gen(b(1 + q - m)), &rhs);
        Ok(self.conjugacy_step(format!("beta-conjugation theta2 m={m}"), &derived, &expected))
    }

    fn gamma_inv(&self, i: u32) -> FreeWord {
        gen(a(i + 1)).concat(&gen_inv(a(i)))
    }

    fn b2m_over_b2m1(&self, family: Family, m: u32) -> Result<FreeWord> {
        let (even, odd) = match family {
            Family::Theta1 => (self.b1(2 * m)?, self.b1(2 * m - 1)?),
            Family::Theta2 => (self.b2(2 * m)?, self.b2(2 * m - 1)?),
        };
        Ok(even.concat(&odd.invert()))
    }

    /// `β_{p+1} = 1` from `b_{p−1}^2 · β_1^{-1} · (b_{p−2}^2)^{-1}`, using `β_1 = 1`.
    fn beta_top_trivial(&mut self) -> Result<bool> {
        let p = self.p;
        let derived = self.b2(p - 1)?.concat(&gen_inv(b(1))).concat(&self.b2(p - 2)?.invert());
        Ok(self.conjugacy_step(String::from("beta_{p+1} trivial"), &derived, &gen(b(p + 1))))
    }

    /// Image of a word once every `β` and `α_1`, `α_2` are trivial.
    fn alpha_image(w: &FreeWord) -> FreeWord {
        w.kill(|g| g.kind == GenKind::Beta || g == a(1) || g == a(2))
    }

    fn alpha_product_theta1(&mut self, m: u32) -> Result<bool> {
        let derived = Self::alpha_image(&self.b1(2 * m - 1)?);
        let expected = gen(a(m + 2)).concat(&gen(a(self.p - m + 2)));
        Ok(self.equality_step(format!("alpha-product theta1 m={m}"), &derived, &expected))
    }

    fn alpha_product_theta2(&mut self, m: u32) -> Result<bool> {
        let q = self.q;
        let derived = Self::alpha_image(&self.b2(2 * m - 1)?);
        let expected = gen(a(q - m + 1)).concat(&gen(a(q + m + 1)));
        Ok(self.equality_step(format!("alpha-product theta2 m={m}"), &derived, &expected))
    }

    /// The cycle must be the single letter `g^{±1}` once `dead` are trivial.
    fn single_generator(&mut self, label: CycleLabel, g: Generator, dead: &BTreeSet<Generator>) -> Result<bool> {
        let w = self.word(label)?.kill(|x| dead.contains(&x));
        let ok = w == gen(g) || w == gen_inv(g);
        Ok(self.push(format!("{label} cancels {g}"), ok, None, format!("{label} reduces to {w}")))
    }
}

type Edge = (Generator, Generator, String);

/// Breadth-first elimination from `seed` along `edges`; every generator in
/// `targets` must be reached.
fn eliminate(seed: &[Generator], edges: &[Edge], targets: &[Generator]) -> Chain {
    let mut dead: BTreeSet<Generator> = seed.iter().copied().collect();
    let mut queue: VecDeque<Generator> = seed.iter().copied().collect();
    let mut links = Vec::new();
    while let Some(x) = queue.pop_front() {
        for (u, v, name) in edges {
            let other = if *u == x {
                *v
            } else if *v == x {
                *u
            } else {
                continue;
            };
            if dead.insert(other) {
                links.push(ChainLink { killed: other, via: x, relation: name.clone() });
                queue.push_back(other);
            }
        }
    }
    let stalled = targets.iter().copied().filter(|t| !dead.contains(t)).collect();
    Chain { seed: seed.to_vec(), links, stalled }
}

/// The generators left after cancelling `α_1, β_1, β_2, α_{q+1}, β_{q+1}, α_2`.
pub fn expected_remaining(p: u32) -> Vec<Generator> {
    let q = (p + 1) / 2;
    let idx = || (3..=q).chain(q + 2..=p + 1);
    idx().map(a).chain(idx().map(b)).collect()
}

/// Runs every derivation step for the catalog and assembles the elimination
/// chains from the steps that verified.
pub fn check_pi1_derivations(cat: &CycleCatalog) -> Result<DerivationReport> {
    let params = cat.params();
    let (p, q, g) = (params.p(), params.q(), params.g());
    let mut ck = Checker { cat, p, q, steps: Vec::new() };

    // single-generator cycles
    use Family::{Theta1, Theta2};
    let mut dead = BTreeSet::new();
    let singles = [
        (CycleLabel::c(Theta1, 1), a(1)),
        (CycleLabel::c(Theta1, 2), b(1)),
        (CycleLabel::c(Theta1, 4), b(2)),
        (CycleLabel::c(Theta2, 1), a(q + 1)),
        (CycleLabel::c(Theta2, 2), b(q + 1)),
        (CycleLabel::c(Theta1, 3), a(2)),
    ];
    for (label, x) in singles {
        ck.single_generator(label, x, &dead)?;
        dead.insert(x);
    }
    let remaining: Vec<Generator> = (1..=g)
        .map(a)
        .chain((1..=g).map(b))
        .filter(|x| !dead.contains(x))
        .collect();
    let expected = expected_remaining(p);
    let ok = remaining == expected && remaining.len() == 2 * p as usize - 4;
    ck.push(
        String::from("remaining generators"),
        ok,
        None,
        format!("{} left, {} expected", remaining.len(), 2 * p - 4),
    );

    let mut beta_edges: Vec<Edge> = Vec::new();
    let mut alpha_edges: Vec<Edge> = Vec::new();
    for m in 1..q {
        if ck.beta_conjugation_theta1(m)? {
            beta_edges.push((b(m + 2), b(p - m + 2), format!("beta-conjugation theta1 m={m}")));
        }
        if ck.alpha_product_theta1(m)? {
            alpha_edges.push((a(m + 2), a(p - m + 2), format!("alpha-product theta1 m={m}")));
        }
    }
    for m in 1..q.saturating_sub(1) {
        if ck.beta_conjugation_theta2(m)? {
            beta_edges.push((b(1 + q - m), b(q + m + 1), format!("beta-conjugation theta2 m={m}")));
        }
        if ck.alpha_product_theta2(m)? {
            alpha_edges.push((a(q - m + 1), a(q + m + 1), format!("alpha-product theta2 m={m}")));
        }
    }
    let top = ck.beta_top_trivial()?;

    let triples: Vec<TripleRow> = (3..=q)
        .map(|j| TripleRow { beta: b(j), first: b(p + 4 - j), second: b(p + 3 - j) })
        .collect();
    let mut rows_ok = true;
    for row in &triples {
        let linked = |x: Generator, y: Generator| {
            beta_edges.iter().any(|(u, v, _)| (*u == x && *v == y) || (*u == y && *v == x))
        };
        rows_ok &= linked(row.beta, row.first) && linked(row.beta, row.second);
    }
    ck.push(
        String::from("conjugacy triples"),
        rows_ok,
        None,
        format!("{} rows", triples.len()),
    );

    let beta_targets: Vec<Generator> = (1..=g).map(b).collect();
    let beta_chain = eliminate(&[b(1), b(2), b(q + 1)], &beta_edges, &beta_targets);
    let beta_chain_alt = if top {
        eliminate(&[b(1), b(2), b(p + 1)], &beta_edges, &beta_targets)
    } else {
        Chain { seed: Vec::new(), links: Vec::new(), stalled: beta_targets.clone() }
    };

    let alpha_targets: Vec<Generator> = (1..=g).map(a).collect();
    let alpha_chain = eliminate(&[a(1), a(2), a(q + 1)], &alpha_edges, &alpha_targets);
    let alpha_alternates = alpha_chain
        .links
        .windows(2)
        .all(|w| w[0].relation.contains("theta1") != w[1].relation.contains("theta1"));

    // the same relations, abelianized, span Z^{2g}
    let genus = params.genus();
    let mut used = Vec::new();
    for (label, _) in singles {
        used.push(abelianize(cat.word(label)?, genus)?);
    }
    for m in 1..p {
        for f in [Theta1, Theta2] {
            used.push(abelianize(cat.word(CycleLabel::b(f, m))?, genus)?);
        }
    }
    let h1 = h1_from_classes(genus, used.iter());
    ck.push(
        String::from("abelian span"),
        h1.is_trivial(),
        None,
        format!("free rank {}, {} divisors", h1.free_rank, h1.divisors.len()),
    );

    Ok(DerivationReport {
        p,
        steps: ck.steps,
        remaining,
        triples,
        beta_chain,
        beta_chain_alt,
        alpha_chain,
        alpha_alternates,
    })
}
