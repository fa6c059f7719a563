use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A generator of the free (bi)unary monoid.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub char);

impl Letter {
    pub fn new(c: char) -> Self {
        Letter(c)
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<char> for Letter {
    fn from(c: char) -> Self {
        Letter(c)
    }
}

/// Converts a string of single-character letters into a plain word.
pub fn word(s: &str) -> Vec<Letter> {
    s.chars().map(Letter).collect()
}

/// An element of the free unary monoid `F_u(Σ)` or biunary monoid `F_bu(Σ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Identity,
    Letter(Letter),
    Product(Box<Term>, Box<Term>),
    Plus(Box<Term>),
    Star(Box<Term>),
}

impl Term {
    pub fn letter(c: char) -> Term {
        Term::Letter(Letter(c))
    }

    pub fn product(left: Term, right: Term) -> Term {
        Term::Product(Box::new(left), Box::new(right))
    }

    pub fn plus(child: Term) -> Term {
        Term::Plus(Box::new(child))
    }

    pub fn star(child: Term) -> Term {
        Term::Star(Box::new(child))
    }

    /// Left-associated product of a plain word; the empty word is `Identity`.
    pub fn from_word(letters: &[Letter]) -> Term {
        Term::product_of(letters.iter().map(|&l| Term::Letter(l)))
    }

    /// Left-associated product of the given factors.
    pub fn product_of(factors: impl IntoIterator<Item = Term>) -> Term {
        let mut iter = factors.into_iter();
        match iter.next() {
            None => Term::Identity,
            Some(first) => iter.fold(first, Term::product),
        }
    }

    /// Number of letter occurrences; unary operators and the identity add nothing.
    pub fn length(&self) -> usize {
        match self {
            Term::Identity => 0,
            Term::Letter(_) => 1,
            Term::Product(l, r) => l.length() + r.length(),
            Term::Plus(c) | Term::Star(c) => c.length(),
        }
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut BTreeSet<Letter>) {
        match self {
            Term::Identity => {}
            Term::Letter(l) => {
                out.insert(*l);
            }
            Term::Product(l, r) => {
                l.collect_letters(out);
                r.collect_letters(out);
            }
            Term::Plus(c) | Term::Star(c) => c.collect_letters(out),
        }
    }

    pub fn has_plus(&self) -> bool {
        match self {
            Term::Identity | Term::Letter(_) => false,
            Term::Product(l, r) => l.has_plus() || r.has_plus(),
            Term::Plus(_) => true,
            Term::Star(c) => c.has_plus(),
        }
    }

    pub fn has_star(&self) -> bool {
        match self {
            Term::Identity | Term::Letter(_) => false,
            Term::Product(l, r) => l.has_star() || r.has_star(),
            Term::Star(_) => true,
            Term::Plus(c) => c.has_star(),
        }
    }

    /// True when the term uses no unary operator.
    pub fn is_plain(&self) -> bool {
        !self.has_plus() && !self.has_star()
    }

    /// The letters of a plain term in order, or `None` if a unary operator occurs.
    pub fn as_plain_word(&self) -> Option<Vec<Letter>> {
        fn go(t: &Term, out: &mut Vec<Letter>) -> bool {
            match t {
                Term::Identity => true,
                Term::Letter(l) => {
                    out.push(*l);
                    true
                }
                Term::Product(l, r) => go(l, out) && go(r, out),
                Term::Plus(_) | Term::Star(_) => false,
            }
        }
        let mut out = Vec::new();
        go(self, &mut out).then_some(out)
    }

    /// Replaces every letter by the term given by `f`.
    pub fn substitute(&self, f: &impl Fn(Letter) -> Term) -> Term {
        match self {
            Term::Identity => Term::Identity,
            Term::Letter(l) => f(*l),
            Term::Product(l, r) => Term::product(l.substitute(f), r.substitute(f)),
            Term::Plus(c) => Term::plus(c.substitute(f)),
            Term::Star(c) => Term::star(c.substitute(f)),
        }
    }

    /// Writes this term as a factor: bare when it is a letter or the identity,
    /// parenthesised otherwise.
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Identity | Term::Letter(_) => write!(f, "{self}"),
            _ => write!(f, "({self})"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Identity => write!(f, "1"),
            Term::Letter(l) => write!(f, "{l}"),
            Term::Product(l, r) => {
                write!(f, "{l}")?;
                // products associate to the left when parsed
                match **r {
                    Term::Product(..) => write!(f, "({r})"),
                    _ => write!(f, "{r}"),
                }
            }
            Term::Plus(c) => {
                c.fmt_atom(f)?;
                write!(f, "^+")
            }
            Term::Star(c) => {
                c.fmt_atom(f)?;
                write!(f, "^*")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("empty parentheses")]
    EmptyGroup,
    #[error("unclosed '(' opened at position {0}")]
    Unclosed(usize),
    #[error("unmatched ')'")]
    UnmatchedClose,
    #[error("expected '+' or '*' after '^'")]
    DanglingCaret,
    #[error("unexpected character {0:?}")]
    Unexpected(char),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let chars: Vec<_> = src.char_indices().collect();
        Parser {
            chars,
            pos: 0,
            len: src.len(),
            _src: src,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.offset(),
            kind,
        }
    }

    fn term(&mut self, open: Option<usize>) -> Result<Term, ParseError> {
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                None => {
                    if let Some(at) = open {
                        return Err(self.error(ParseErrorKind::Unclosed(at)));
                    }
                    break;
                }
                Some(')') => {
                    if open.is_none() {
                        return Err(self.error(ParseErrorKind::UnmatchedClose));
                    }
                    break;
                }
                Some(_) => factors.push(self.factor()?),
            }
        }
        if factors.is_empty() {
            let kind = if open.is_some() {
                ParseErrorKind::EmptyGroup
            } else {
                ParseErrorKind::Empty
            };
            return Err(self.error(kind));
        }
        Ok(Term::product_of(factors))
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while self.peek() == Some('^') {
            self.pos += 1;
            match self.peek() {
                Some('+') => t = Term::plus(t),
                Some('*') => t = Term::star(t),
                _ => return Err(self.error(ParseErrorKind::DanglingCaret)),
            }
            self.pos += 1;
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let c = self.peek().expect("caller checked for input");
        match c {
            'a'..='z' => {
                self.pos += 1;
                Ok(Term::letter(c))
            }
            '1' => {
                self.pos += 1;
                Ok(Term::Identity)
            }
            '(' => {
                let at = self.offset();
                self.pos += 1;
                let inner = self.term(Some(at))?;
                // term() only returns Ok at ')' when a group is open
                self.pos += 1;
                Ok(inner)
            }
            other => Err(self.error(ParseErrorKind::Unexpected(other))),
        }
    }
}

/// Parses the surface syntax: juxtaposition for products, `1` for the
/// identity, postfix `^+` and `^*` for the unary operations.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    Parser::new(text).term(None)
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a() -> Term {
        Term::letter('a')
    }

    #[test]
    fn parses_grammar_examples() {
        assert_eq!(
            parse_term("a(a)^+").unwrap(),
            Term::product(a(), Term::plus(a()))
        );
        assert_eq!(
            parse_term("(ab)^+b").unwrap(),
            Term::product(
                Term::plus(Term::product(a(), Term::letter('b'))),
                Term::letter('b')
            )
        );
        assert_eq!(parse_term("1^+").unwrap(), Term::plus(Term::Identity));
        assert_eq!(parse_term("1").unwrap(), Term::Identity);
        assert_eq!(
            parse_term(" x ^* y ").unwrap(),
            Term::product(Term::star(Term::letter('x')), Term::letter('y'))
        );
    }

    #[test]
    fn reports_errors_with_positions() {
        let e = parse_term("(ab").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Unclosed(0));
        assert_eq!(e.position, 3);
        let e = parse_term("ab)").unwrap_err();
        assert_eq!((e.position, e.kind), (2, ParseErrorKind::UnmatchedClose));
        let e = parse_term("a^").unwrap_err();
        assert_eq!((e.position, e.kind), (2, ParseErrorKind::DanglingCaret));
        let e = parse_term("a^b").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DanglingCaret);
        assert_eq!(parse_term("").unwrap_err().kind, ParseErrorKind::Empty);
        assert_eq!(parse_term("  ").unwrap_err().kind, ParseErrorKind::Empty);
        assert_eq!(parse_term("a()").unwrap_err().kind, ParseErrorKind::EmptyGroup);
        assert_eq!(
            parse_term("aB").unwrap_err().kind,
            ParseErrorKind::Unexpected('B')
        );
        assert_eq!(
            parse_term("^+").unwrap_err().kind,
            ParseErrorKind::Unexpected('^')
        );
    }

    #[test]
    fn lengths_count_letters_only() {
        // a 1^+ (a a^+)^+ has three letters
        assert_eq!(parse_term("a1^+(aa^+)^+").unwrap().length(), 3);
        assert_eq!(parse_term("(ab)^+b^+1^+(a^+)^+").unwrap().length(), 4);
        assert_eq!(Term::Identity.length(), 0);
    }

    #[test]
    fn plain_words() {
        let t = parse_term("abca").unwrap();
        assert_eq!(t.as_plain_word().unwrap(), word("abca"));
        assert!(parse_term("ab^+").unwrap().as_plain_word().is_none());
        assert_eq!(Term::from_word(&word("abc")), parse_term("abc").unwrap());
        assert_eq!(Term::from_word(&[]), Term::Identity);
    }

    pub(crate) fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = prop_oneof![
            1 => Just(Term::Identity),
            4 => prop::sample::select(vec!['a', 'b', 'c']).prop_map(Term::letter),
        ];
        leaf.prop_recursive(5, 32, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Term::product(l, r)),
                inner.clone().prop_map(Term::plus),
                inner.prop_map(Term::star),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(t in arb_term()) {
            let printed = t.to_string();
            prop_assert_eq!(parse_term(&printed).unwrap(), t);
        }
    }
}
