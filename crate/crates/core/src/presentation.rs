//! Words over a generating alphabet, finite presentations, and evaluation of
//! words under maps into permutation groups.
//!
//! A [`Word`] stores signed, 1-based generator indices: `+i` is generator
//! `i - 1` and `-i` its inverse. Nothing beyond free reduction is ever
//! normalised; questions about equality in the presented group are answered
//! only inside finite quotients.

use std::collections::HashSet;
use std::fmt;

use crate::permgroup::Perm;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from signed 1-based letters. Zero letters are rejected.
    pub fn from_letters(letters: Vec<i32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Structural("word letter 0 is not a generator".into()));
        }
        Ok(Word(letters))
    }

    /// The single-letter word for generator `index` (0-based).
    pub fn generator(index: usize) -> Self {
        Word(vec![index as i32 + 1])
    }

    /// `generator(index)^exp`.
    pub fn power_of(index: usize, exp: i64) -> Self {
        let letter = if exp >= 0 { index as i32 + 1 } else { -(index as i32 + 1) };
        Word(vec![letter; exp.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest 0-based generator index referenced, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.unsigned_abs() as usize - 1).max()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp >= 0 { self.clone() } else { self.inverse() };
        let mut out = Vec::with_capacity(base.len() * exp.unsigned_abs() as usize);
        for _ in 0..exp.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word(out)
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Word) -> Word {
        self.concat(other).concat(&self.inverse())
    }

    /// Replaces every generator `i` by `images[i]` (inverse letters by the
    /// inverse word).
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        let mut out = Vec::new();
        for &l in &self.0 {
            let g = l.unsigned_abs() as usize - 1;
            let img = images.get(g).ok_or_else(|| {
                Error::Structural(format!("substitution has no image for generator {g}"))
            })?;
            if l > 0 {
                out.extend_from_slice(&img.0);
            } else {
                out.extend(img.0.iter().rev().map(|x| -x));
            }
        }
        Ok(Word(out))
    }

    /// Exponent sum of each generator, indexed 0..n.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut sums = vec![0i64; n];
        for &l in &self.0 {
            let g = l.unsigned_abs() as usize - 1;
            if g < n {
                sums[g] += l.signum() as i64;
            }
        }
        sums
    }
}

/// Returns the unique freely reduced word equal to `w` in the free group.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

pub fn is_freely_reduced(w: &Word) -> bool {
    w.0.windows(2).all(|p| p[0] != -p[1])
}

/// Checks that `name` is a usable generator identifier.
pub fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses whitespace-separated tokens `a`, `a^-1`, `a^3` into a word over
/// the alphabet `names`. The empty string is the identity word.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| Error::parse(format!("token `{token}`"), "bad exponent"))?;
                (n, exp)
            }
            None => (token, 1),
        };
        let index = names.iter().position(|g| g == name).ok_or_else(|| {
            Error::parse(format!("token `{token}`"), format!("unknown generator `{name}`"))
        })?;
        letters.extend(Word::power_of(index, exp).0);
    }
    Ok(Word(letters))
}

/// Canonical text form of a word: runs of one letter are written as powers.
pub fn format_word(w: &Word, names: &[String]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.0.len() {
        let l = w.0[i];
        let mut j = i;
        while j < w.0.len() && w.0[j] == l {
            j += 1;
        }
        let run = (j - i) as i64;
        let g = l.unsigned_abs() as usize - 1;
        let name = names.get(g).map(String::as_str).unwrap_or("?");
        let exp = if l > 0 { run } else { -run };
        if exp == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{exp}"));
        }
        i = j;
    }
    parts.join(" ")
}

/// Evaluates `w` with generator `i` sent to `images[i]`.
pub fn evaluate_in(images: &[Perm], degree: usize, w: &Word) -> Result<Perm> {
    let mut acc = Perm::identity(degree);
    for &l in &w.0 {
        let g = l.unsigned_abs() as usize - 1;
        let img = images.get(g).ok_or_else(|| {
            Error::Structural(format!("word references unknown generator index {g}"))
        })?;
        acc = if l > 0 { acc.then(img) } else { acc.then(&img.inverse()) };
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !valid_identifier(g) {
                return Err(Error::Structural(format!("invalid generator name `{g}`")));
            }
            if !seen.insert(g.as_str()) {
                return Err(Error::Structural(format!("duplicate generator name `{g}`")));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(m) = r.max_generator() {
                if m >= generators.len() {
                    return Err(Error::Structural(format!(
                        "relator {i} references undeclared generator index {m}"
                    )));
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Parses relators given in word syntax.
    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let rels = relators
            .iter()
            .map(|r| parse_word(r, &names))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(names, rels)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn rank_upper_bound(&self) -> usize {
        self.generators.len()
    }

    pub fn format(&self, w: &Word) -> String {
        format_word(w, &self.generators)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, &self.generators)
    }

    /// The first relator that does not die under the given images, if any.
    pub fn failing_relator(&self, images: &[Perm], degree: usize) -> Result<Option<usize>> {
        if images.len() != self.generators.len() {
            return Err(Error::Structural(format!(
                "expected {} generator images, got {}",
                self.generators.len(),
                images.len()
            )));
        }
        for (i, r) in self.relators.iter().enumerate() {
            if !evaluate_in(images, degree, r)?.is_identity() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// True iff every relator of `p` evaluates to the identity under `images`.
pub fn verify_hom(p: &Presentation, images: &[Perm]) -> Result<bool> {
    let degree = images.first().map(Perm::degree).unwrap_or(1);
    if images.iter().any(|g| g.degree() != degree) {
        return Err(Error::Structural("generator images have different degrees".into()));
    }
    Ok(p.failing_relator(images, degree)?.is_none())
}

/// A verified homomorphism from a presented group into a permutation group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMap {
    source: Presentation,
    degree: usize,
    images: Vec<Perm>,
}

impl GroupMap {
    pub fn new(source: Presentation, degree: usize, images: Vec<Perm>) -> Result<Self> {
        if images.iter().any(|g| g.degree() != degree) {
            return Err(Error::Structural(format!("generator images must have degree {degree}")));
        }
        if let Some(i) = source.failing_relator(&images, degree)? {
            return Err(Error::Structural(format!(
                "relator `{}` does not evaluate to the identity",
                source.format(&source.relators()[i])
            )));
        }
        Ok(GroupMap { source, degree, images })
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn evaluate(&self, w: &Word) -> Result<Perm> {
        evaluate_in(&self.images, self.degree, w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn cyc(d: usize, s: &str) -> Perm {
        Perm::parse(d, s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        let w = Word::from_letters(vec![1, -1]).unwrap();
        assert_eq!(free_reduce(&w), Word::identity());
        let w = Word::from_letters(vec![1, 2, -2, 1]).unwrap();
        assert_eq!(free_reduce(&w).letters(), &[1, 1]);
        assert_eq!(free_reduce(&Word::identity()), Word::identity());
        let w = Word::from_letters(vec![1, 2, -2, -1, 2]).unwrap();
        assert_eq!(free_reduce(&w).letters(), &[2]);
    }

    #[test]
    fn parse_and_format() {
        let n = names(&["a", "b"]);
        let w = parse_word("a b^-1 a^3", &n).unwrap();
        assert_eq!(w.letters(), &[1, -2, 1, 1, 1]);
        assert_eq!(format_word(&w, &n), "a b^-1 a^3");
        assert_eq!(format_word(&parse_word("a^-2", &n).unwrap(), &n), "a^-2");
        assert_eq!(parse_word("", &n).unwrap(), Word::identity());
        assert!(parse_word("c", &n).is_err());
        assert!(parse_word("a^x", &n).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let p = Presentation::parse(&["a"], &[]).unwrap();
        let m = GroupMap::new(p.clone(), 2, vec![cyc(2, "(0 1)")]).unwrap();
        assert!(m.evaluate(&p.parse_word("a a").unwrap()).unwrap().is_identity());
        assert!(m.evaluate(&Word::identity()).unwrap().is_identity());

        let m6 = GroupMap::new(p.clone(), 6, vec![cyc(6, "(0 1 2 3 4 5)")]).unwrap();
        let x = m6.evaluate(&p.parse_word("a^3").unwrap()).unwrap();
        assert_eq!(x.order(), 2);

        let bad = Word::generator(3);
        assert!(matches!(m6.evaluate(&bad), Err(Error::Structural(_))));
    }

    #[test]
    fn verify_hom_examples() {
        let p = Presentation::parse(&["a"], &["a^2"]).unwrap();
        assert!(verify_hom(&p, &[cyc(2, "(0 1)")]).unwrap());
        assert!(!verify_hom(&p, &[cyc(3, "(0 1 2)")]).unwrap());
        let free = Presentation::parse(&["a", "b"], &[]).unwrap();
        assert!(verify_hom(&free, &[cyc(3, "(0 1 2)"), cyc(3, "(0 1)")]).unwrap());
        assert!(GroupMap::new(p, 3, vec![cyc(3, "(0 1 2)")]).is_err());
    }

    #[test]
    fn presentation_validation() {
        assert!(Presentation::parse(&["a", "a"], &[]).is_err());
        assert!(Presentation::parse(&[""], &[]).is_err());
        let rel = Word::generator(2);
        assert!(Presentation::new(names(&["a"]), vec![rel]).is_err());
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        prop::collection::vec(prop_oneof![Just(1), Just(-1), Just(2), Just(-2), Just(3), Just(-3)], 0..30)
            .prop_map(|v| Word::from_letters(v).unwrap())
    }

    fn perm_strategy() -> impl Strategy<Value = Perm> {
        Just((0..5usize).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn reduce_idempotent_and_shrinking(w in word_strategy()) {
            let r = free_reduce(&w);
            prop_assert!(r.len() <= w.len());
            prop_assert!(is_freely_reduced(&r));
            prop_assert_eq!(free_reduce(&r), r);
        }

        #[test]
        fn evaluation_respects_reduction_and_products(
            u in word_strategy(), v in word_strategy(),
            imgs in prop::collection::vec(perm_strategy(), 3)
        ) {
            let e = |w: &Word| evaluate_in(&imgs, 5, w).unwrap();
            prop_assert_eq!(e(&u), e(&free_reduce(&u)));
            prop_assert_eq!(e(&u.concat(&v)), e(&u).then(&e(&v)));
            prop_assert!(e(&u.concat(&u.inverse())).is_identity());
        }

        #[test]
        fn verify_hom_ignores_relator_order(
            rels in prop::collection::vec(word_strategy(), 0..4),
            imgs in prop::collection::vec(perm_strategy(), 3)
        ) {
            let n = names(&["a", "b", "c"]);
            let p1 = Presentation::new(n.clone(), rels.clone()).unwrap();
            let mut rev = rels.clone();
            rev.reverse();
            let p2 = Presentation::new(n, rev).unwrap();
            prop_assert_eq!(verify_hom(&p1, &imgs).unwrap(), verify_hom(&p2, &imgs).unwrap());
        }

        #[test]
        fn format_parse_roundtrip(w in word_strategy()) {
            let n = names(&["a", "b", "c"]);
            let text = format_word(&w, &n);
            prop_assert_eq!(parse_word(&text, &n).unwrap(), w);
        }
    }
}
