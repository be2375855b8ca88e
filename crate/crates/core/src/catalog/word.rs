//! Words in group generators: letters `a`, `b`, ... name the generators,
//! `*` multiplies, `^n` takes a (possibly negative) power, parentheses
//! group, and `1` is the identity.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Identity,
    Generator(usize),
    Product(Vec<Word>),
    Power(Box<Word>, i64),
}

impl Word {
    pub fn parse(text: &str) -> Result<Word> {
        let tokens: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser { tokens, pos: 0 };
        let word = parser.product()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error());
        }
        Ok(word)
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        match self {
            Word::Identity => None,
            Word::Generator(i) => Some(*i),
            Word::Product(ws) => ws.iter().filter_map(Word::max_generator).max(),
            Word::Power(w, _) => w.max_generator(),
        }
    }

    pub fn evaluate(&self, gens: &[Permutation], degree: usize) -> Result<Permutation> {
        match self {
            Word::Identity => Ok(Permutation::identity(degree)),
            Word::Generator(i) => gens
                .get(*i)
                .map(|g| g.extended(degree))
                .ok_or_else(|| Error::InvalidArgument(format!("no generator {}", letter(*i)))),
            Word::Product(ws) => ws.iter().try_fold(Permutation::identity(degree), |acc, w| {
                Ok(acc.compose(&w.evaluate(gens, degree)?))
            }),
            Word::Power(w, e) => Ok(w.evaluate(gens, degree)?.pow(*e)),
        }
    }
}

fn letter(i: usize) -> char {
    (b'a' + i as u8) as char
}

struct Parser {
    tokens: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self) -> Error {
        let text: String = self.tokens.iter().collect();
        Error::Parse(format!("bad word {text:?} at position {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<Word> {
        let mut factors = vec![self.power()?];
        while self.peek() == Some('*') {
            self.pos += 1;
            factors.push(self.power()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Word::Product(factors)
        })
    }

    fn power(&mut self) -> Result<Word> {
        let mut base = self.atom()?;
        while self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            if self.peek() == Some('-') {
                self.pos += 1;
            }
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.tokens[start..self.pos].iter().collect();
            let e: i64 = digits.parse().map_err(|_| self.error())?;
            base = Word::Power(Box::new(base), e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.product()?;
                if self.peek() != Some(')') {
                    return Err(self.error());
                }
                self.pos += 1;
                Ok(w)
            }
            Some('1') => {
                self.pos += 1;
                Ok(Word::Identity)
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                Ok(Word::Generator((c as u8 - b'a') as usize))
            }
            _ => Err(self.error()),
        }
    }
}
