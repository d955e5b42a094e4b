use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A partial injective map on `{1, ..., degree}`.
///
/// Internally 0-based: `map[i] = Some(j)` sends the point `i + 1` to `j + 1`.
/// The product is function composition, `(a * b)(x) = a(b(x))`, defined where
/// both steps are; the star is the inverse relation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialBijection {
    degree: u32,
    map: Vec<Option<u32>>,
}

impl PartialBijection {
    /// Builds from 1-based (source, target) pairs, rejecting repeats and
    /// out-of-range points.
    pub fn new(degree: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPartialBijection(
                "degree must be positive".into(),
            ));
        }
        let mut map = vec![None; degree as usize];
        let mut targets = BTreeSet::new();
        for &(s, t) in pairs {
            if s == 0 || s > degree || t == 0 || t > degree {
                return Err(Error::InvalidPartialBijection(format!(
                    "point ({s},{t}) outside 1..={degree}"
                )));
            }
            if map[(s - 1) as usize].is_some() {
                return Err(Error::InvalidPartialBijection(format!(
                    "source {s} repeats"
                )));
            }
            if !targets.insert(t) {
                return Err(Error::InvalidPartialBijection(format!(
                    "target {t} repeats"
                )));
            }
            map[(s - 1) as usize] = Some(t - 1);
        }
        Ok(Self { degree, map })
    }

    pub fn identity(degree: u32) -> Self {
        Self {
            degree,
            map: (0..degree).map(Some).collect(),
        }
    }

    /// Partial identity on the given 1-based domain points.
    pub fn partial_identity(degree: u32, dom: &[u32]) -> Result<Self> {
        let pairs: Vec<(u32, u32)> = dom.iter().map(|&p| (p, p)).collect();
        Self::new(degree, &pairs)
    }

    pub fn empty(degree: u32) -> Self {
        Self {
            degree,
            map: vec![None; degree as usize],
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.map.iter().filter(|p| p.is_some()).count()
    }

    /// 1-based (source, target) pairs in source order.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(i, t)| t.map(|t| (i as u32 + 1, t + 1)))
            .collect()
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree, other.degree);
        let map = other
            .map
            .iter()
            .map(|step| step.and_then(|mid| self.map[mid as usize]))
            .collect();
        Self {
            degree: self.degree,
            map,
        }
    }

    pub fn star(&self) -> Self {
        let mut map = vec![None; self.degree as usize];
        for (i, t) in self.map.iter().enumerate() {
            if let Some(t) = t {
                map[*t as usize] = Some(i as u32);
            }
        }
        Self {
            degree: self.degree,
            map,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }
}

/// Closes a generator set under product and star.
///
/// Returns the elements in canonical order (rank, then the map itself).
/// Exceeding `cap` aborts with the partial size reached.
pub fn generate_closure(
    generators: &[PartialBijection],
    cap: usize,
) -> Result<Vec<PartialBijection>> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidInput("no generators given".into()));
    };
    let degree = first.degree();
    if generators.iter().any(|g| g.degree() != degree) {
        return Err(Error::InvalidInput(
            "generators must share one degree".into(),
        ));
    }
    let mut seen: BTreeSet<PartialBijection> = BTreeSet::new();
    let mut queue: Vec<PartialBijection> = Vec::new();
    let push = |el: PartialBijection,
                    seen: &mut BTreeSet<PartialBijection>,
                    queue: &mut Vec<PartialBijection>| {
        if seen.insert(el.clone()) {
            queue.push(el);
        }
    };
    for g in generators {
        push(g.clone(), &mut seen, &mut queue);
    }
    while let Some(el) = queue.pop() {
        if seen.len() > cap {
            return Err(Error::ClosureCapExceeded { reached: seen.len() });
        }
        push(el.star(), &mut seen, &mut queue);
        let snapshot: Vec<PartialBijection> = seen.iter().cloned().collect();
        for other in &snapshot {
            push(el.compose(other), &mut seen, &mut queue);
            push(other.compose(&el), &mut seen, &mut queue);
        }
        if seen.len() > cap {
            return Err(Error::ClosureCapExceeded { reached: seen.len() });
        }
    }
    let mut out: Vec<PartialBijection> = seen.into_iter().collect();
    out.sort_by_key(|b| (b.rank(), b.map.clone()));
    Ok(out)
}
