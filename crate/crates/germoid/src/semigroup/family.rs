//! Arithmetic for the built-in symbolic families: word utilities for the
//! prefix-cancellation monoid and the product formulas of the chain and
//! pair-of-naturals families.

/// A word over the alphabet `1..=arity`, stored as letters.
pub type Word = Vec<u8>;

/// `strip_prefix(w, p) = Some(s)` when `w = p ++ s`.
pub fn strip_prefix(word: &[u8], prefix: &[u8]) -> Option<Word> {
    word.strip_prefix(prefix).map(|s| s.to_vec())
}

pub fn concat(a: &[u8], b: &[u8]) -> Word {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out
}

/// Shortlex order: by length, then letterwise.
pub fn shortlex(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// All words of length at most `max_len` in shortlex order.
pub fn words_up_to(arity: u8, max_len: u32) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * arity as usize);
        for w in &layer {
            for letter in 1..=arity {
                let mut ext = w.clone();
                ext.push(letter);
                next.push(ext);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Product of two word pairs under prefix cancellation; `None` is the zero.
pub fn pair_mul(a: &(Word, Word), b: &(Word, Word)) -> Option<(Word, Word)> {
    let (mu, nu) = a;
    let (sigma, tau) = b;
    if let Some(s) = strip_prefix(sigma, nu) {
        Some((concat(mu, &s), tau.clone()))
    } else {
        strip_prefix(nu, sigma).map(|t| (mu.clone(), concat(tau, &t)))
    }
}

/// Product in the pair-of-naturals monoid.
pub fn bicyclic_mul(a: (u32, u32), b: (u32, u32)) -> (u32, u32) {
    let (m, n) = a;
    let (k, l) = b;
    let t = n.max(k);
    (m + t - n, l + t - k)
}

pub fn render_word(w: &[u8]) -> String {
    if w.is_empty() {
        "-".to_string()
    } else {
        w.iter().map(|l| l.to_string()).collect()
    }
}

pub fn parse_word(s: &str, arity: u8) -> Option<Word> {
    if s == "-" {
        return Some(Vec::new());
    }
    let mut out = Vec::with_capacity(s.len());
    for ch in s.chars() {
        let d = ch.to_digit(10)? as u8;
        if d == 0 || d > arity {
            return None;
        }
        out.push(d);
    }
    Some(out)
}
