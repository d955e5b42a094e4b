//! Inverse semigroup carriers: finite closures of partial bijections and the
//! four built-in symbolic families, with product, star, idempotents and the
//! natural partial order.

pub mod family;
pub mod partial_bijection;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use family::{bicyclic_mul, pair_mul, parse_word, render_word, shortlex, words_up_to, Word};
use partial_bijection::{generate_closure, PartialBijection};

/// Which symbolic family a carrier instantiates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `{1, S, e1, e2, ...}` with `S^2 = 1`, `S* = S`, `S e_n = e_n S = e_n`
    /// and `e_n e_m = e_min(n,m)`.
    ChainWithSymmetry,
    /// The same increasing chain of projections without the symmetry.
    PureChain,
    /// Pairs of naturals `(m, n)` under `(m,n)(k,l) = (m-n+t, l-k+t)`,
    /// `t = max(n,k)`, with `(m,n)* = (n,m)`.
    Bicyclic,
    /// Word pairs over `1..=arity` under prefix cancellation, plus a zero.
    /// `kill_zero` controls whether the filter at the zero idempotent is
    /// admitted as a spectrum point.
    Polycyclic { arity: u8, kill_zero: bool },
}

/// Product/star tables of a finite carrier, indexed by canonical element order.
#[derive(Debug, PartialEq, Eq)]
pub struct FiniteTables {
    pub elements: Vec<PartialBijection>,
    mul: Vec<Vec<usize>>,
    star: Vec<usize>,
    idempotents: Vec<usize>,
}

#[derive(Debug, PartialEq, Eq)]
enum CarrierKind {
    Finite(FiniteTables),
    Family(Family),
}

/// An immutable inverse-semigroup carrier. Cloning is cheap and all
/// operations are pure, so values can be shared freely across threads.
#[derive(Clone)]
pub struct InverseSemigroup {
    inner: Arc<CarrierKind>,
}

impl PartialEq for InverseSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}
impl Eq for InverseSemigroup {}

impl fmt::Debug for InverseSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.inner {
            CarrierKind::Finite(t) => write!(f, "FiniteInverseSemigroup({} elements)", t.elements.len()),
            CarrierKind::Family(fam) => write!(f, "{fam:?}"),
        }
    }
}

/// Carrier-specific element encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Code {
    /// Index into a finite carrier's canonical element list.
    Finite(usize),
    /// Chain families: the identity.
    One,
    /// Chain-with-symmetry: the symmetry.
    Sym,
    /// Chain families: the n-th projection, `n >= 1`.
    Proj(u32),
    /// Pair of naturals.
    Bi(u32, u32),
    /// Word pair.
    Pair(Word, Word),
    /// The zero of the word-pair family.
    Zero,
}

impl PartialOrd for Code {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Code {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl Code {
    /// Canonical total order used for deterministic listings: identity,
    /// symmetry, then projections; pairs lexicographically; word pairs in
    /// shortlex order with the zero last.
    pub fn canonical_cmp(&self, other: &Code) -> Ordering {
        fn rank(c: &Code) -> u8 {
            match c {
                Code::Finite(_) => 0,
                Code::One => 1,
                Code::Sym => 2,
                Code::Proj(_) => 3,
                Code::Bi(..) => 4,
                Code::Pair(..) => 5,
                Code::Zero => 6,
            }
        }
        match (self, other) {
            (Code::Finite(a), Code::Finite(b)) => a.cmp(b),
            (Code::Proj(a), Code::Proj(b)) => a.cmp(b),
            (Code::Bi(m, n), Code::Bi(p, q)) => m.cmp(p).then(n.cmp(q)),
            (Code::Pair(a, b), Code::Pair(c, d)) => {
                shortlex(a, c).then_with(|| shortlex(b, d))
            }
            _ => rank(self).cmp(&rank(other)),
        }
    }
}

/// An element of a carrier. Equality requires the same carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    carrier: InverseSemigroup,
    code: Code,
}

impl Element {
    pub fn carrier(&self) -> &InverseSemigroup {
        &self.carrier
    }
    pub fn code(&self) -> &Code {
        &self.code
    }
    pub fn name(&self) -> String {
        self.carrier.name(&self.code)
    }
    pub fn star(&self) -> Element {
        Element {
            carrier: self.carrier.clone(),
            code: self.carrier.star(&self.code),
        }
    }
    pub fn is_idempotent(&self) -> bool {
        self.carrier.is_idempotent(&self.code)
    }
}

/// Product of two elements of the same carrier.
pub fn compose(a: &Element, b: &Element) -> Result<Element> {
    if a.carrier != b.carrier {
        return Err(Error::CarrierMismatch);
    }
    Ok(Element {
        carrier: a.carrier.clone(),
        code: a.carrier.mul(&a.code, &b.code),
    })
}

/// The unique generalized inverse.
pub fn star(a: &Element) -> Element {
    a.star()
}

/// Natural partial order: `g <= h` iff `g = h g* g`.
pub fn natural_leq(g: &Element, h: &Element) -> Result<bool> {
    if g.carrier != h.carrier {
        return Err(Error::CarrierMismatch);
    }
    Ok(g.carrier.leq(&g.code, &h.code))
}

impl InverseSemigroup {
    fn from_kind(kind: CarrierKind) -> Self {
        Self { inner: Arc::new(kind) }
    }

    pub fn chain_with_symmetry() -> Self {
        Self::from_kind(CarrierKind::Family(Family::ChainWithSymmetry))
    }

    pub fn pure_chain() -> Self {
        Self::from_kind(CarrierKind::Family(Family::PureChain))
    }

    pub fn bicyclic() -> Self {
        Self::from_kind(CarrierKind::Family(Family::Bicyclic))
    }

    pub fn polycyclic(arity: u8, kill_zero: bool) -> Result<Self> {
        if !(2..=9).contains(&arity) {
            return Err(Error::InvalidInput(format!(
                "word-pair family arity must be in 2..=9, got {arity}"
            )));
        }
        Ok(Self::from_kind(CarrierKind::Family(Family::Polycyclic {
            arity,
            kill_zero,
        })))
    }

    /// Closure of partial bijections as a finite carrier with full tables.
    pub fn from_partial_bijections(
        generators: &[PartialBijection],
        cap: usize,
    ) -> Result<Self> {
        let elements = generate_closure(generators, cap)?;
        let index: BTreeMap<&PartialBijection, usize> =
            elements.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let n = elements.len();
        let mut mul = vec![vec![0usize; n]; n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i][j] = index[&a.compose(b)];
            }
        }
        let star: Vec<usize> = elements.iter().map(|b| index[&b.star()]).collect();
        let idempotents: Vec<usize> = (0..n).filter(|&i| mul[i][i] == i).collect();
        Ok(Self::from_kind(CarrierKind::Finite(FiniteTables {
            elements,
            mul,
            star,
            idempotents,
        })))
    }

    pub fn family(&self) -> Option<&Family> {
        match &*self.inner {
            CarrierKind::Family(f) => Some(f),
            CarrierKind::Finite(_) => None,
        }
    }

    pub fn finite_tables(&self) -> Option<&FiniteTables> {
        match &*self.inner {
            CarrierKind::Finite(t) => Some(t),
            CarrierKind::Family(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.finite_tables().is_some()
    }

    /// Number of elements of a finite carrier.
    pub fn size(&self) -> Option<usize> {
        self.finite_tables().map(|t| t.elements.len())
    }

    pub fn element(&self, code: Code) -> Result<Element> {
        self.validate(&code)?;
        Ok(Element {
            carrier: self.clone(),
            code,
        })
    }

    fn validate(&self, code: &Code) -> Result<()> {
        let ok = match (&*self.inner, code) {
            (CarrierKind::Finite(t), Code::Finite(i)) => *i < t.elements.len(),
            (CarrierKind::Family(Family::ChainWithSymmetry), Code::One | Code::Sym) => true,
            (CarrierKind::Family(Family::ChainWithSymmetry), Code::Proj(n)) => *n >= 1,
            (CarrierKind::Family(Family::PureChain), Code::One) => true,
            (CarrierKind::Family(Family::PureChain), Code::Proj(n)) => *n >= 1,
            (CarrierKind::Family(Family::Bicyclic), Code::Bi(..)) => true,
            (CarrierKind::Family(Family::Polycyclic { arity, .. }), Code::Pair(a, b)) => a
                .iter()
                .chain(b.iter())
                .all(|&l| l >= 1 && l <= *arity),
            (CarrierKind::Family(Family::Polycyclic { .. }), Code::Zero) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "code {code:?} does not belong to {self:?}"
            )))
        }
    }

    pub fn mul(&self, a: &Code, b: &Code) -> Code {
        match &*self.inner {
            CarrierKind::Finite(t) => {
                let (Code::Finite(i), Code::Finite(j)) = (a, b) else {
                    unreachable!("finite carrier with non-index code")
                };
                Code::Finite(t.mul[*i][*j])
            }
            CarrierKind::Family(Family::ChainWithSymmetry | Family::PureChain) => {
                match (a, b) {
                    (Code::One, x) | (x, Code::One) => x.clone(),
                    (Code::Sym, Code::Sym) => Code::One,
                    (Code::Sym, Code::Proj(n)) | (Code::Proj(n), Code::Sym) => Code::Proj(*n),
                    (Code::Proj(n), Code::Proj(m)) => Code::Proj(*n.min(m)),
                    _ => unreachable!("chain carrier with foreign code"),
                }
            }
            CarrierKind::Family(Family::Bicyclic) => {
                let (Code::Bi(m, n), Code::Bi(k, l)) = (a, b) else {
                    unreachable!("pair carrier with foreign code")
                };
                let (p, q) = bicyclic_mul((*m, *n), (*k, *l));
                Code::Bi(p, q)
            }
            CarrierKind::Family(Family::Polycyclic { .. }) => match (a, b) {
                (Code::Zero, _) | (_, Code::Zero) => Code::Zero,
                (Code::Pair(mu, nu), Code::Pair(sigma, tau)) => {
                    match pair_mul(&(mu.clone(), nu.clone()), &(sigma.clone(), tau.clone())) {
                        Some((x, y)) => Code::Pair(x, y),
                        None => Code::Zero,
                    }
                }
                _ => unreachable!("word-pair carrier with foreign code"),
            },
        }
    }

    pub fn star(&self, a: &Code) -> Code {
        match &*self.inner {
            CarrierKind::Finite(t) => {
                let Code::Finite(i) = a else {
                    unreachable!()
                };
                Code::Finite(t.star[*i])
            }
            CarrierKind::Family(Family::ChainWithSymmetry | Family::PureChain) => a.clone(),
            CarrierKind::Family(Family::Bicyclic) => {
                let Code::Bi(m, n) = a else { unreachable!() };
                Code::Bi(*n, *m)
            }
            CarrierKind::Family(Family::Polycyclic { .. }) => match a {
                Code::Zero => Code::Zero,
                Code::Pair(mu, nu) => Code::Pair(nu.clone(), mu.clone()),
                _ => unreachable!(),
            },
        }
    }

    pub fn is_idempotent(&self, a: &Code) -> bool {
        self.mul(a, a) == *a
    }

    /// `g <= h` iff `g = h g* g`.
    pub fn leq(&self, g: &Code, h: &Code) -> bool {
        let gsg = self.mul(&self.star(g), g);
        *g == self.mul(h, &gsg)
    }

    /// The equivalent right-handed form `g = g g* h`.
    pub fn leq_alt(&self, g: &Code, h: &Code) -> bool {
        let ggs = self.mul(g, &self.star(g));
        *g == self.mul(&ggs, h)
    }

    /// All elements up to the truncation level, in canonical order.
    /// Levels bound the projection index, both coordinates, or both word
    /// lengths; finite carriers ignore the level.
    pub fn elements(&self, truncation: u32) -> Vec<Code> {
        match &*self.inner {
            CarrierKind::Finite(t) => (0..t.elements.len()).map(Code::Finite).collect(),
            CarrierKind::Family(Family::ChainWithSymmetry) => {
                let mut out = vec![Code::One, Code::Sym];
                out.extend((1..=truncation).map(Code::Proj));
                out
            }
            CarrierKind::Family(Family::PureChain) => {
                let mut out = vec![Code::One];
                out.extend((1..=truncation).map(Code::Proj));
                out
            }
            CarrierKind::Family(Family::Bicyclic) => {
                let mut out = Vec::new();
                for m in 0..=truncation {
                    for n in 0..=truncation {
                        out.push(Code::Bi(m, n));
                    }
                }
                out
            }
            CarrierKind::Family(Family::Polycyclic { arity, .. }) => {
                let ws = words_up_to(*arity, truncation);
                let mut out = Vec::new();
                for a in &ws {
                    for b in &ws {
                        out.push(Code::Pair(a.clone(), b.clone()));
                    }
                }
                out.push(Code::Zero);
                out
            }
        }
    }

    /// All idempotents up to the truncation level, in canonical order.
    pub fn idempotents(&self, truncation: u32) -> Vec<Code> {
        match &*self.inner {
            CarrierKind::Finite(t) => t.idempotents.iter().map(|&i| Code::Finite(i)).collect(),
            CarrierKind::Family(Family::ChainWithSymmetry | Family::PureChain) => {
                let mut out = vec![Code::One];
                out.extend((1..=truncation).map(Code::Proj));
                out
            }
            CarrierKind::Family(Family::Bicyclic) => {
                (0..=truncation).map(|k| Code::Bi(k, k)).collect()
            }
            CarrierKind::Family(Family::Polycyclic { arity, .. }) => {
                let mut out: Vec<Code> = words_up_to(*arity, truncation)
                    .into_iter()
                    .map(|w| Code::Pair(w.clone(), w))
                    .collect();
                out.push(Code::Zero);
                out
            }
        }
    }

    /// The zero element, when the carrier has one by construction.
    pub fn zero(&self) -> Option<Code> {
        match &*self.inner {
            CarrierKind::Family(Family::Polycyclic { .. }) => Some(Code::Zero),
            _ => None,
        }
    }

    pub fn name(&self, code: &Code) -> String {
        match code {
            Code::Finite(i) => format!("g{i}"),
            Code::One => "1".to_string(),
            Code::Sym => "S".to_string(),
            Code::Proj(n) => format!("e{n}"),
            Code::Bi(m, n) => format!("({m},{n})"),
            Code::Pair(a, b) => format!("{}|{}", render_word(a), render_word(b)),
            Code::Zero => "0".to_string(),
        }
    }

    /// Inverse of `name`. Finite carriers accept `g<i>`; families accept
    /// their canonical renderings.
    pub fn parse(&self, s: &str) -> Result<Element> {
        let bad = || Error::UnknownElement(s.to_string());
        let code = match &*self.inner {
            CarrierKind::Finite(t) => {
                let i: usize = s.strip_prefix('g').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if i >= t.elements.len() {
                    return Err(bad());
                }
                Code::Finite(i)
            }
            CarrierKind::Family(Family::ChainWithSymmetry | Family::PureChain) => match s {
                "1" => Code::One,
                "S" => Code::Sym,
                _ => {
                    let n: u32 = s.strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    if n == 0 {
                        return Err(bad());
                    }
                    Code::Proj(n)
                }
            },
            CarrierKind::Family(Family::Bicyclic) => {
                let body = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
                let (m, n) = body.split_once(',').ok_or_else(bad)?;
                Code::Bi(
                    m.trim().parse().map_err(|_| bad())?,
                    n.trim().parse().map_err(|_| bad())?,
                )
            }
            CarrierKind::Family(Family::Polycyclic { arity, .. }) => {
                if s == "0" {
                    Code::Zero
                } else {
                    let (a, b) = s.split_once('|').ok_or_else(bad)?;
                    Code::Pair(
                        parse_word(a, *arity).ok_or_else(bad)?,
                        parse_word(b, *arity).ok_or_else(bad)?,
                    )
                }
            }
        };
        self.element(code)
    }

    /// Partial-bijection description of a finite element, for reports.
    pub fn describe_finite(&self, code: &Code) -> Option<Vec<(u32, u32)>> {
        match (&*self.inner, code) {
            (CarrierKind::Finite(t), Code::Finite(i)) => Some(t.elements[*i].pairs()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> InverseSemigroup {
        InverseSemigroup::chain_with_symmetry()
    }

    fn el(c: &InverseSemigroup, s: &str) -> Element {
        c.parse(s).unwrap()
    }

    #[test]
    fn chain_relations() {
        let c = chain();
        let s = el(&c, "S");
        let e3 = el(&c, "e3");
        assert_eq!(compose(&s, &s).unwrap(), el(&c, "1"));
        assert_eq!(compose(&s, &e3).unwrap(), e3);
        assert_eq!(compose(&e3, &s).unwrap(), e3);
        assert_eq!(s.star(), s);
        assert_eq!(
            compose(&el(&c, "e2"), &el(&c, "e5")).unwrap(),
            el(&c, "e2")
        );
    }

    #[test]
    fn partial_identity_composes_to_itself() {
        let e = PartialBijection::partial_identity(2, &[1, 2]).unwrap();
        let c = InverseSemigroup::from_partial_bijections(std::slice::from_ref(&e), 10).unwrap();
        let g = c.element(Code::Finite(0)).unwrap();
        assert_eq!(compose(&g, &g).unwrap(), g);
    }

    #[test]
    fn bicyclic_product_and_star() {
        let c = InverseSemigroup::bicyclic();
        let a = c.element(Code::Bi(1, 0)).unwrap();
        let b = c.element(Code::Bi(0, 1)).unwrap();
        assert_eq!(compose(&a, &b).unwrap().code(), &Code::Bi(1, 1));
        let g = c.element(Code::Bi(2, 0)).unwrap();
        assert_eq!(g.star().code(), &Code::Bi(0, 2));
        // g g* g = g, with the product formula as the oracle
        let ggs = compose(&g, &g.star()).unwrap();
        assert_eq!(compose(&ggs, &g).unwrap(), g);
    }

    #[test]
    fn carrier_mismatch_is_a_usage_error() {
        let a = chain().parse("S").unwrap();
        let b = InverseSemigroup::bicyclic().element(Code::Bi(0, 0)).unwrap();
        assert!(matches!(compose(&a, &b), Err(Error::CarrierMismatch)));
    }

    #[test]
    fn natural_order_on_the_chain() {
        let c = chain();
        for n in 1..6u32 {
            let lo = c.element(Code::Proj(n)).unwrap();
            let hi = c.element(Code::Proj(n + 1)).unwrap();
            assert!(natural_leq(&lo, &hi).unwrap());
            assert!(!natural_leq(&hi, &lo).unwrap());
        }
        let s = el(&c, "S");
        assert!(natural_leq(&s, &s).unwrap());
    }

    #[test]
    fn bicyclic_diagonal_order_matches_brute_force() {
        let c = InverseSemigroup::bicyclic();
        for k in 0..=10u32 {
            for n in 0..=10u32 {
                let a = c.element(Code::Bi(k, k)).unwrap();
                let b = c.element(Code::Bi(n, n)).unwrap();
                assert_eq!(natural_leq(&a, &b).unwrap(), k >= n, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn order_alternative_form_agrees_everywhere() {
        for carrier in [
            chain(),
            InverseSemigroup::pure_chain(),
            InverseSemigroup::bicyclic(),
            InverseSemigroup::polycyclic(2, false).unwrap(),
        ] {
            let lvl = if carrier.family() == Some(&Family::Bicyclic) { 4 } else { 3 };
            let codes = carrier.elements(lvl);
            for a in &codes {
                for b in &codes {
                    assert_eq!(carrier.leq(a, b), carrier.leq_alt(a, b), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn idempotent_listings() {
        let c = chain();
        let names: Vec<String> = c.idempotents(3).iter().map(|e| c.name(e)).collect();
        assert_eq!(names, vec!["1", "e1", "e2", "e3"]);

        let b = InverseSemigroup::bicyclic();
        let got = b.idempotents(2);
        // brute-force idempotency over the enumerated window as the oracle
        let brute: Vec<Code> = b
            .elements(2)
            .into_iter()
            .filter(|e| b.is_idempotent(e))
            .collect();
        assert_eq!(got, vec![Code::Bi(0, 0), Code::Bi(1, 1), Code::Bi(2, 2)]);
        assert_eq!(brute, got);

        // a closure that happens to be a group has only its identity
        let swap = PartialBijection::new(2, &[(1, 2), (2, 1)]).unwrap();
        let grp = InverseSemigroup::from_partial_bijections(&[swap], 10).unwrap();
        assert_eq!(grp.idempotents(0).len(), 1);
    }

    #[test]
    fn semigroup_laws_hold_on_small_windows() {
        for carrier in [
            chain(),
            InverseSemigroup::pure_chain(),
            InverseSemigroup::bicyclic(),
            InverseSemigroup::polycyclic(2, false).unwrap(),
        ] {
            let lvl = match carrier.family() {
                Some(Family::Polycyclic { .. }) => 2,
                _ => 3,
            };
            let codes = carrier.elements(lvl);
            for a in &codes {
                let asa = carrier.mul(&carrier.mul(a, &carrier.star(a)), a);
                assert_eq!(asa, *a);
                assert_eq!(carrier.star(&carrier.star(a)), *a);
                for b in &codes {
                    assert_eq!(
                        carrier.star(&carrier.mul(a, b)),
                        carrier.mul(&carrier.star(b), &carrier.star(a))
                    );
                    for c in &codes {
                        assert_eq!(
                            carrier.mul(&carrier.mul(a, b), c),
                            carrier.mul(a, &carrier.mul(b, c))
                        );
                    }
                }
            }
            // idempotents commute
            let idems = carrier.idempotents(lvl);
            for e in &idems {
                for f in &idems {
                    assert_eq!(carrier.mul(e, f), carrier.mul(f, e));
                }
            }
        }
    }

    #[test]
    fn finite_closure_laws_exhaustive() {
        let swap = PartialBijection::new(2, &[(1, 2), (2, 1)]).unwrap();
        let on_one = PartialBijection::partial_identity(2, &[1]).unwrap();
        let c = InverseSemigroup::from_partial_bijections(&[swap, on_one], 100).unwrap();
        assert_eq!(c.size(), Some(7));
        let codes = c.elements(0);
        for a in &codes {
            for b in &codes {
                assert_eq!(
                    c.star(&c.mul(a, b)),
                    c.mul(&c.star(b), &c.star(a))
                );
                for d in &codes {
                    assert_eq!(c.mul(&c.mul(a, b), d), c.mul(a, &c.mul(b, d)));
                }
            }
        }
    }

    #[test]
    fn natural_order_is_a_partial_order() {
        for carrier in [chain(), InverseSemigroup::bicyclic()] {
            let codes = carrier.elements(4);
            for a in &codes {
                assert!(carrier.leq(a, a));
                for b in &codes {
                    if carrier.leq(a, b) && carrier.leq(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in &codes {
                        if carrier.leq(a, b) && carrier.leq(b, c) {
                            assert!(carrier.leq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        let p = InverseSemigroup::polycyclic(2, false).unwrap();
        for code in p.elements(2) {
            let name = p.name(&code);
            assert_eq!(p.parse(&name).unwrap().code(), &code);
        }
        let b = InverseSemigroup::bicyclic();
        assert_eq!(b.parse("(3,1)").unwrap().code(), &Code::Bi(3, 1));
    }
}
