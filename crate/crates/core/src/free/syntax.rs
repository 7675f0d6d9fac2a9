//! Text syntax for words and elements: generators are lowercase names, an
//! inverse carries a trailing apostrophe, and letters are separated by
//! whitespace, as in `a b' a`. An element `w ▷ g` is written `w : g`; a bare
//! name is the generator itself.

use super::element::{FormalConjugate, FreeRackElement};
use super::word::{fg_reduce, FreeGroupWord, Letter};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum WordError {
    #[error("{token:?} at letter {position} is not a generator name (lowercase, optionally followed by ')")]
    BadToken { token: String, position: usize },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("an element needs exactly one generator after ':', got {0:?}")]
    BadElement(String),
}

/// Names for generator ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl Alphabet {
    /// `a`, `b`, `c`, ... for up to 26 generators.
    pub fn standard(size: usize) -> Self {
        assert!(size <= 26, "standard alphabet has 26 letters");
        Alphabet { names: (0..size).map(|i| ((b'a' + i as u8) as char).to_string()).collect() }
    }

    pub fn new<I: IntoIterator<Item = S>, S: Into<String>>(names: I) -> Result<Self, WordError> {
        let mut alphabet = Alphabet::default();
        for name in names {
            let name = name.into();
            if !valid_name(&name) {
                return Err(WordError::BadToken { token: name, position: 0 });
            }
            alphabet.intern(&name);
        }
        Ok(alphabet)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: usize) -> Option<&str> {
        self.names.get(g).map(String::as_str)
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn intern(&mut self, name: &str) -> usize {
        self.id(name).unwrap_or_else(|| {
            self.names.push(name.to_string());
            self.names.len() - 1
        })
    }

    fn letters(&mut self, text: &str, grow: bool) -> Result<Vec<Letter>, WordError> {
        text.split_whitespace()
            .enumerate()
            .map(|(position, token)| {
                let (name, inverse) = match token.strip_suffix('\'') {
                    Some(name) => (name, true),
                    None => (token, false),
                };
                if !valid_name(name) {
                    return Err(WordError::BadToken { token: token.to_string(), position });
                }
                let generator = if grow {
                    self.intern(name)
                } else {
                    self.id(name).ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?
                };
                Ok(Letter { generator, inverse })
            })
            .collect()
    }

    /// Parses and reduces a word over the names already in the alphabet.
    pub fn parse_word(&self, text: &str) -> Result<FreeGroupWord, WordError> {
        self.clone().letters(text, false).map(fg_reduce)
    }

    /// Parses a word, adding unseen names to the alphabet.
    pub fn parse_word_extending(&mut self, text: &str) -> Result<FreeGroupWord, WordError> {
        self.letters(text, true).map(fg_reduce)
    }

    /// Parses `w : g` or a bare generator `g`, adding unseen names.
    pub fn parse_element_extending(&mut self, text: &str) -> Result<FreeRackElement, WordError> {
        let (word, generator) = match text.split_once(':') {
            Some((w, g)) => (w, g),
            None => ("", text),
        };
        let g = generator.trim();
        if g.split_whitespace().count() != 1 || g.ends_with('\'') {
            return Err(WordError::BadElement(generator.to_string()));
        }
        let conjugator = self.parse_word_extending(word)?;
        let letters = self.letters(g, true)?;
        Ok(FreeRackElement::new(conjugator, letters[0].generator))
    }

    pub fn format_word(&self, w: &FreeGroupWord) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|l| {
                let name = self.name(l.generator).map_or_else(|| format!("g{}", l.generator), str::to_string);
                if l.inverse {
                    name + "'"
                } else {
                    name
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_element<E: FormalConjugate>(&self, x: &E) -> String {
        let g = self.name(x.generator()).map_or_else(|| format!("g{}", x.generator()), str::to_string);
        if x.conjugator().is_empty() {
            g
        } else {
            format!("{} : {}", self.format_word(x.conjugator()), g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        let mut alphabet = Alphabet::default();
        let w = alphabet.parse_word_extending("a b b' a").unwrap();
        assert_eq!(alphabet.format_word(&w), "a a");
        let w = alphabet.parse_word_extending("a b' a").unwrap();
        assert_eq!(alphabet.format_word(&w), "a b' a");
        assert_eq!(alphabet.format_word(&alphabet.parse_word("a a'").unwrap()), "1");
        assert_eq!(alphabet.len(), 2);
        assert!(matches!(alphabet.parse_word("c"), Err(WordError::UnknownGenerator(_))));
        assert!(matches!(alphabet.parse_word("A"), Err(WordError::BadToken { .. })));
        assert!(matches!(alphabet.parse_word("a''"), Err(WordError::BadToken { .. })));
    }

    #[test]
    fn elements() {
        let mut alphabet = Alphabet::standard(2);
        let x = alphabet.parse_element_extending("a b' : b").unwrap();
        assert_eq!(x.generator(), 1);
        assert_eq!(alphabet.format_element(&x), "a b' : b");
        let g = alphabet.parse_element_extending(" a ").unwrap();
        assert!(g.conjugator().is_empty());
        assert_eq!(alphabet.format_element(&g), "a");
        assert!(alphabet.parse_element_extending("a : b c").is_err());
        assert!(alphabet.parse_element_extending("a : b'").is_err());
    }
}
