use std::fmt;

use serde::Serialize;

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in the free group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = FreeWord::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// `a_gen^exp`.
    pub fn generator_power(gen: usize, exp: i64) -> Self {
        let l = Letter::new(gen, exp < 0);
        FreeWord {
            letters: vec![l; exp.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends a letter, cancelling against the last one when possible.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn extend(&mut self, other: &FreeWord) {
        for &l in &other.letters {
            self.push(l);
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `w^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::empty();
        for _ in 0..n.unsigned_abs() {
            out.extend(&base);
        }
        out
    }

    /// Sum of the exponents of generator `j`.
    pub fn exponent_sum(&self, j: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == j)
            .map(|l| l.exponent())
            .sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Replaces every generator `a_j` by the word `images[j]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = FreeWord::empty();
        for l in &self.letters {
            let img = &images[l.gen];
            if l.inverse {
                out.extend(&img.inverse());
            } else {
                out.extend(img);
            }
        }
        out
    }

    /// Renders with run-length exponents, e.g. `a^2 b a^-1`; the empty word
    /// is written `1`.
    pub fn render(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let e = run as i64 * l.exponent();
            let name = names.get(l.gen).map(String::as_str).unwrap_or("?");
            if e == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{e}"));
            }
            i += run;
        }
        parts.join(" ")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.max_generator().unwrap_or(0)).map(|j| format!("x{j}")).collect();
        f.write_str(&self.render(&names))
    }
}

/// One term `sign · prefix` of a Fox derivative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoxTerm {
    pub sign: i8,
    pub prefix: FreeWord,
}

/// `∂w/∂a_j` as a list of signed prefixes: `+u` for every occurrence
/// `u a_j ⋯` and `-u a_j^{-1}` for every occurrence `u a_j^{-1} ⋯`.
pub fn fox_derivative(w: &FreeWord, j: usize) -> Vec<FoxTerm> {
    let mut out = Vec::new();
    let mut prefix = FreeWord::empty();
    for &l in w.letters() {
        if l.gen == j && !l.inverse {
            out.push(FoxTerm {
                sign: 1,
                prefix: prefix.clone(),
            });
        }
        prefix.push(l);
        if l.gen == j && l.inverse {
            out.push(FoxTerm {
                sign: -1,
                prefix: prefix.clone(),
            });
        }
    }
    out
}
