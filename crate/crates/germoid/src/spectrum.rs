//! The character space of the idempotent semilattice: filters, carriers of
//! idempotent indicators, the point-mass picture of principal characters, and
//! the actions of the semigroup on characters and indicators.
//!
//! Characters are held intensionally: a canonical code plus a membership
//! predicate. Equality of characters is equality of canonical codes. For the
//! built-in families the listed codes exhaust the spectrum at each truncation
//! (principal characters together with the family's limit points).

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rat_int, render_rat, Rat};
use crate::semigroup::family::{render_word, shortlex, words_up_to, Word};
use crate::semigroup::{compose, Code, Element, Family, InverseSemigroup};

/// An eventually periodic right-infinite word `pre (period)^inf`, kept in a
/// canonical form so that structural equality decides equality of the words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InfWord {
    pre: Word,
    period: Word,
}

impl InfWord {
    pub fn new(pre: Word, period: Word) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        let mut pre = pre;
        let mut period = period;
        // shrink the period to its primitive root
        for d in 1..period.len() {
            if period.len().is_multiple_of(d) && period.chunks(d).all(|c| c == &period[..d]) {
                period.truncate(d);
                break;
            }
        }
        // absorb any prefix tail that merely repeats the cycle
        while let Some(&last) = pre.last() {
            if last == *period.last().unwrap() {
                pre.pop();
                period.rotate_right(1);
            } else {
                break;
            }
        }
        Self { pre, period }
    }

    pub fn letter(&self, i: usize) -> u8 {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.period[(i - self.pre.len()) % self.period.len()]
        }
    }

    pub fn has_prefix(&self, w: &[u8]) -> bool {
        w.iter().enumerate().all(|(i, &l)| self.letter(i) == l)
    }

    /// Drops the first `n` letters.
    pub fn suffix(&self, n: usize) -> InfWord {
        if n <= self.pre.len() {
            InfWord::new(self.pre[n..].to_vec(), self.period.clone())
        } else {
            let k = (n - self.pre.len()) % self.period.len();
            let mut period = self.period.clone();
            period.rotate_left(k);
            InfWord::new(Vec::new(), period)
        }
    }

    pub fn prepend(&self, w: &[u8]) -> InfWord {
        let mut pre = w.to_vec();
        pre.extend_from_slice(&self.pre);
        InfWord::new(pre, self.period.clone())
    }

    pub fn render(&self) -> String {
        format!(
            "w:{}({})",
            if self.pre.is_empty() { String::new() } else { render_word(&self.pre) },
            render_word(&self.period)
        )
    }

    pub fn parse(s: &str, arity: u8) -> Option<InfWord> {
        let body = s.strip_prefix("w:")?;
        let (pre, rest) = body.split_once('(')?;
        let period = rest.strip_suffix(')')?;
        let pre = if pre.is_empty() {
            Vec::new()
        } else {
            crate::semigroup::family::parse_word(pre, arity)?
        };
        let period = crate::semigroup::family::parse_word(period, arity)?;
        if period.is_empty() {
            return None;
        }
        Some(InfWord::new(pre, period))
    }

    fn canonical_cmp(&self, other: &InfWord) -> Ordering {
        shortlex(&self.pre, &other.pre).then_with(|| shortlex(&self.period, &other.period))
    }
}

impl PartialOrd for InfWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for InfWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

/// Canonical code of a character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharCode {
    /// The filter of everything above a fixed idempotent.
    Principal(Code),
    /// The filter of all diagonal pairs of the pair-of-naturals family.
    BicyclicInfinity,
    /// The filter of all word prefixes of an infinite word.
    PolyWord(InfWord),
}

impl CharCode {
    pub fn canonical_cmp(&self, other: &CharCode) -> Ordering {
        use CharCode::*;
        match (self, other) {
            (Principal(a), Principal(b)) => a.canonical_cmp(b),
            (Principal(_), _) => Ordering::Less,
            (_, Principal(_)) => Ordering::Greater,
            (BicyclicInfinity, BicyclicInfinity) => Ordering::Equal,
            (BicyclicInfinity, PolyWord(_)) => Ordering::Less,
            (PolyWord(_), BicyclicInfinity) => Ordering::Greater,
            (PolyWord(a), PolyWord(b)) => a.canonical_cmp(b),
        }
    }
}

/// A point of the spectrum: a filter on the idempotent semilattice, presented
/// by its canonical code and evaluated through `evaluates`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    carrier: InverseSemigroup,
    code: CharCode,
}

impl Character {
    pub fn principal(e: &Element) -> Result<Character> {
        if !e.is_idempotent() {
            return Err(Error::NotIdempotent(e.name()));
        }
        Ok(Character {
            carrier: e.carrier().clone(),
            code: CharCode::Principal(e.code().clone()),
        })
    }

    pub fn from_code(carrier: &InverseSemigroup, code: CharCode) -> Character {
        Character {
            carrier: carrier.clone(),
            code,
        }
    }

    pub fn carrier(&self) -> &InverseSemigroup {
        &self.carrier
    }

    pub fn code(&self) -> &CharCode {
        &self.code
    }

    pub fn is_principal(&self) -> bool {
        matches!(self.code, CharCode::Principal(_))
    }

    /// Evaluation on an idempotent code: 1 iff the idempotent lies in the
    /// filter. Multiplicative by construction.
    pub fn evaluates_code(&self, e: &Code) -> bool {
        match &self.code {
            CharCode::Principal(f) => self.carrier.leq(f, e),
            CharCode::BicyclicInfinity => matches!(e, Code::Bi(k, l) if k == l),
            CharCode::PolyWord(w) => match e {
                Code::Pair(a, b) if a == b => w.has_prefix(a),
                _ => false,
            },
        }
    }

    pub fn evaluates(&self, e: &Element) -> bool {
        self.evaluates_code(e.code())
    }

    pub fn render(&self) -> String {
        match &self.code {
            CharCode::Principal(e) => format!("principal:{}", self.carrier.name(e)),
            CharCode::BicyclicInfinity => "limit:inf".to_string(),
            CharCode::PolyWord(w) => format!("limit:{}", w.render()),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.code {
            CharCode::Principal(e) => serde_json::json!({
                "kind": "principal",
                "e": self.carrier.name(e),
            }),
            CharCode::BicyclicInfinity => serde_json::json!({
                "kind": "limit",
                "code": "inf",
            }),
            CharCode::PolyWord(w) => serde_json::json!({
                "kind": "limit",
                "code": w.render(),
            }),
        }
    }
}

/// Parses `principal:<element>`, `limit:inf`, `limit:w:pre(period)`, or a
/// bare idempotent element name.
pub fn parse_character(carrier: &InverseSemigroup, s: &str) -> Result<Character> {
    let bad = || Error::UnknownCharacter(s.to_string());
    if let Some(rest) = s.strip_prefix("principal:") {
        return Character::principal(&carrier.parse(rest)?);
    }
    if let Some(rest) = s.strip_prefix("limit:") {
        match carrier.family() {
            Some(Family::Bicyclic) if rest == "inf" => {
                return Ok(Character::from_code(carrier, CharCode::BicyclicInfinity));
            }
            Some(Family::Polycyclic { arity, .. }) => {
                let w = InfWord::parse(rest, *arity).ok_or_else(bad)?;
                return Ok(Character::from_code(carrier, CharCode::PolyWord(w)));
            }
            _ => return Err(bad()),
        }
    }
    match carrier.parse(s) {
        Ok(e) => Character::principal(&e),
        Err(_) => Err(bad()),
    }
}

/// All filters of a finite semilattice. Every filter of a finite meet
/// semilattice is the up-set of its minimum, so these are exactly the
/// principal characters, one per idempotent.
pub fn characters_finite(carrier: &InverseSemigroup) -> Vec<Character> {
    assert!(carrier.is_finite(), "characters_finite needs a finite carrier");
    carrier
        .idempotents(0)
        .into_iter()
        .map(|e| Character::from_code(carrier, CharCode::Principal(e)))
        .collect()
}

/// The non-isolated boundary points of a family's spectrum, up to the
/// truncation level. Chain families converge to the principal character of
/// the identity; the pair-of-naturals family has the single all-diagonal
/// filter; the word-pair family has one filter per eventually periodic
/// infinite word (enumerated with prefix plus period length bounded by the
/// truncation, capped at 8).
pub fn limit_characters(carrier: &InverseSemigroup, truncation: u32) -> Vec<Character> {
    match carrier.family() {
        None => Vec::new(),
        Some(Family::ChainWithSymmetry | Family::PureChain) => {
            vec![Character::from_code(carrier, CharCode::Principal(Code::One))]
        }
        Some(Family::Bicyclic) => {
            vec![Character::from_code(carrier, CharCode::BicyclicInfinity)]
        }
        Some(Family::Polycyclic { arity, .. }) => {
            let bound = truncation.min(8) as usize;
            let mut seen: Vec<InfWord> = Vec::new();
            for plen in 1..=bound {
                for period in words_up_to(*arity, plen as u32)
                    .into_iter()
                    .filter(|w| w.len() == plen)
                {
                    for pre in words_up_to(*arity, (bound - plen) as u32) {
                        seen.push(InfWord::new(pre, period.clone()));
                    }
                }
            }
            seen.sort_by(|a, b| a.canonical_cmp(b));
            seen.dedup();
            seen.into_iter()
                .map(|w| Character::from_code(carrier, CharCode::PolyWord(w)))
                .collect()
        }
    }
}

/// Principal characters at the truncation plus the limit characters, without
/// duplicates, in canonical order. For the word-pair family with `kill_zero`
/// the filter at the zero idempotent is excluded.
pub fn characters(carrier: &InverseSemigroup, truncation: u32) -> Vec<Character> {
    let kill_zero = matches!(
        carrier.family(),
        Some(Family::Polycyclic { kill_zero: true, .. })
    );
    let mut out: Vec<Character> = carrier
        .idempotents(truncation)
        .into_iter()
        .filter(|e| !(kill_zero && *e == Code::Zero))
        .map(|e| Character::from_code(carrier, CharCode::Principal(e)))
        .collect();
    for x in limit_characters(carrier, truncation) {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out.sort_by(|a, b| a.code.canonical_cmp(&b.code));
    out
}

/// Membership of a character in the carrier of an idempotent indicator.
pub fn carrier_membership(x: &Character, e: &Element) -> bool {
    x.evaluates(e)
}

/// Principal characters from a count-capped idempotent enumeration plus the
/// family limit points: the search pool used by witness verification and
/// separation sweeps, which may need points past the working truncation.
pub fn sample_characters(
    carrier: &InverseSemigroup,
    truncation: u32,
    cap: usize,
) -> Vec<Character> {
    let kill_zero = matches!(
        carrier.family(),
        Some(Family::Polycyclic { kill_zero: true, .. })
    );
    let mut out: Vec<Character> = capped_idempotents(carrier, truncation, cap)
        .into_iter()
        .filter(|e| !(kill_zero && *e == Code::Zero))
        .map(|e| Character::from_code(carrier, CharCode::Principal(e)))
        .collect();
    for x in limit_characters(carrier, truncation.min(6)) {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// The action on points: `(x . g)(e) = x(g e g*)`, or `None` when that
/// evaluation is identically zero (equivalently when `x(g g*) = 0`).
pub fn act_character(x: &Character, g: &Element) -> Option<Character> {
    let carrier = g.carrier();
    debug_assert_eq!(x.carrier(), carrier);
    match &x.code {
        CharCode::Principal(f) => {
            let ggs = carrier.mul(g.code(), &carrier.star(g.code()));
            if carrier.leq(f, &ggs) {
                let moved = carrier.mul(&carrier.mul(&carrier.star(g.code()), f), g.code());
                Some(Character::from_code(carrier, CharCode::Principal(moved)))
            } else {
                None
            }
        }
        // every idempotent is diagonal and conjugation keeps it so
        CharCode::BicyclicInfinity => Some(x.clone()),
        CharCode::PolyWord(w) => match g.code() {
            Code::Zero => None,
            Code::Pair(mu, nu) => {
                if w.has_prefix(mu) {
                    Some(Character::from_code(
                        carrier,
                        CharCode::PolyWord(w.suffix(mu.len()).prepend(nu)),
                    ))
                } else {
                    None
                }
            }
            _ => unreachable!("word filter on a non-word carrier"),
        },
    }
}

/// The action on indicators: `g(1_e) = 1_{g e g*}`.
pub fn act_indicator(g: &Element, e: &Element) -> Result<Element> {
    if g.carrier() != e.carrier() {
        return Err(Error::CarrierMismatch);
    }
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent(e.name()));
    }
    let moved = compose(&compose(g, e)?, &g.star())?;
    debug_assert!(moved.is_idempotent());
    Ok(moved)
}

/// A finite rational combination of point masses at principal characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonFunction {
    carrier: InverseSemigroup,
    /// (coefficient, idempotent) pairs with distinct idempotents, sorted.
    terms: Vec<(Rat, Code)>,
}

impl EpsilonFunction {
    pub fn zero(carrier: &InverseSemigroup) -> Self {
        Self {
            carrier: carrier.clone(),
            terms: Vec::new(),
        }
    }

    pub fn point_mass(e: &Element) -> Result<Self> {
        if !e.is_idempotent() {
            return Err(Error::NotIdempotent(e.name()));
        }
        Ok(Self {
            carrier: e.carrier().clone(),
            terms: vec![(rat_int(1), e.code().clone())],
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Rat, Code)] {
        &self.terms
    }

    /// Evaluation at a character: nonzero only at principal points.
    pub fn eval(&self, x: &Character) -> Rat {
        let CharCode::Principal(f) = &x.code else {
            return rat_int(0);
        };
        self.terms
            .iter()
            .filter(|(_, e)| e == f)
            .map(|(c, _)| c.clone())
            .fold(rat_int(0), |a, b| a + b)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(c, e)| format!("{}*eps[{}]", render_rat(c), self.carrier.name(e)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The action on point masses: `g(eps_e) = eps_{g e g*}` when `e <= g* g`,
/// and zero otherwise.
pub fn epsilon_action(g: &Element, e: &Element) -> Result<EpsilonFunction> {
    if g.carrier() != e.carrier() {
        return Err(Error::CarrierMismatch);
    }
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent(e.name()));
    }
    let carrier = g.carrier();
    let gsg = carrier.mul(&carrier.star(g.code()), g.code());
    if carrier.leq(e.code(), &gsg) {
        EpsilonFunction::point_mass(&act_indicator(g, e)?)
    } else {
        Ok(EpsilonFunction::zero(carrier))
    }
}

/// A basis set of the spectrum topology: the carrier of one idempotent with
/// the carriers of finitely many others removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicOpen {
    positive: Element,
    negatives: Vec<Element>,
}

impl BasicOpen {
    /// Normalizes the negative list: duplicates dropped, only maximal
    /// negatives kept (a smaller negative is implied by a larger one).
    pub fn new(positive: Element, negatives: Vec<Element>) -> Result<BasicOpen> {
        if !positive.is_idempotent() {
            return Err(Error::NotIdempotent(positive.name()));
        }
        let carrier = positive.carrier().clone();
        let mut negs: Vec<Element> = Vec::new();
        for f in negatives {
            if f.carrier() != &carrier {
                return Err(Error::CarrierMismatch);
            }
            if !f.is_idempotent() {
                return Err(Error::NotIdempotent(f.name()));
            }
            if !negs.contains(&f) {
                negs.push(f);
            }
        }
        let keep: Vec<Element> = negs
            .iter()
            .filter(|f| {
                !negs
                    .iter()
                    .any(|g| g != *f && carrier.leq(f.code(), g.code()))
            })
            .cloned()
            .collect();
        let mut keep = keep;
        keep.sort_by(|a, b| a.code().canonical_cmp(b.code()));
        keep.dedup();
        Ok(BasicOpen {
            positive,
            negatives: keep,
        })
    }

    pub fn carrier_of(e: Element) -> Result<BasicOpen> {
        BasicOpen::new(e, Vec::new())
    }

    pub fn positive(&self) -> &Element {
        &self.positive
    }

    pub fn negatives(&self) -> &[Element] {
        &self.negatives
    }

    pub fn contains(&self, x: &Character) -> bool {
        x.evaluates(&self.positive) && self.negatives.iter().all(|f| !x.evaluates(f))
    }

    /// A negative at or above the positive empties the set outright.
    pub fn is_certainly_empty(&self) -> bool {
        let carrier = self.positive.carrier();
        self.negatives
            .iter()
            .any(|f| carrier.leq(self.positive.code(), f.code()))
    }

    pub fn render(&self) -> String {
        let mut s = format!("[{}", self.positive.name());
        for f in &self.negatives {
            s.push_str(&format!(" \\ {}", f.name()));
        }
        s.push(']');
        s
    }
}

/// Outcome of the density sweep over basis sets.
#[derive(Debug, Serialize)]
pub struct DensityReport {
    pub opens_checked: usize,
    pub skipped_empty: usize,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// Idempotents in canonical order, truncated both by level and by count, so
/// that exponential families stay enumerable at deep truncations.
pub fn capped_idempotents(carrier: &InverseSemigroup, truncation: u32, cap: usize) -> Vec<Code> {
    if let Some(Family::Polycyclic { .. }) = carrier.family() {
        let mut level = 0u32;
        loop {
            let list = carrier.idempotents(level);
            if list.len() >= cap || level >= truncation {
                return list.into_iter().take(cap).collect();
            }
            level += 1;
        }
    }
    carrier.idempotents(truncation).into_iter().take(cap).collect()
}

/// Checks that the principal characters meet every nonempty basis set: each
/// enumerated basis open (capped by `basis_budget`) that contains any sampled
/// character must contain a principal one.
pub fn density_check(
    carrier: &InverseSemigroup,
    truncation: u32,
    basis_budget: u32,
) -> DensityReport {
    let budget = basis_budget as usize;
    // sample principal points a little past the open enumeration so that
    // opens with negatives at the boundary still see points beyond them
    let kill_zero = matches!(
        carrier.family(),
        Some(Family::Polycyclic { kill_zero: true, .. })
    );
    let mut sample: Vec<Character> =
        capped_idempotents(carrier, truncation.saturating_add(2), 4 * budget + 8)
            .into_iter()
            .filter(|e| !(kill_zero && *e == Code::Zero))
            .map(|e| Character::from_code(carrier, CharCode::Principal(e)))
            .collect();
    sample.extend(limit_characters(carrier, truncation.min(6)));
    let opens = enumerate_basic_opens(carrier, truncation, budget);
    let mut checked = 0;
    let mut skipped = 0;
    let mut violations = Vec::new();
    for open in &opens {
        let Some(_witness) = sample.iter().find(|x| open.contains(x)) else {
            skipped += 1;
            continue;
        };
        checked += 1;
        let principal = sample.iter().any(|x| x.is_principal() && open.contains(x));
        if !principal {
            violations.push(open.render());
        }
    }
    DensityReport {
        opens_checked: checked,
        skipped_empty: skipped,
        passed: violations.is_empty(),
        violations,
    }
}

/// Canonical capped stream of basis opens: for each positive idempotent, the
/// bare carrier, then singleton removals, then the removal of every
/// enumerated candidate at once.
pub fn enumerate_basic_opens(
    carrier: &InverseSemigroup,
    truncation: u32,
    budget: usize,
) -> Vec<BasicOpen> {
    let idems: Vec<Element> = capped_idempotents(carrier, truncation, budget + 2)
        .into_iter()
        .map(|c| carrier.element(c).unwrap())
        .collect();
    let mut out = Vec::new();
    'outer: for p in &idems {
        let candidates: Vec<Element> = idems
            .iter()
            .filter(|f| *f != p && !carrier.leq(p.code(), f.code()))
            .cloned()
            .collect();
        let mut negative_sets: Vec<Vec<Element>> = vec![Vec::new()];
        negative_sets.extend(candidates.iter().map(|f| vec![f.clone()]));
        if candidates.len() > 1 {
            negative_sets.push(candidates.clone());
        }
        for negs in negative_sets {
            if out.len() >= budget {
                break 'outer;
            }
            out.push(BasicOpen::new(p.clone(), negs).unwrap());
        }
    }
    out
}
