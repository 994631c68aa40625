//! Permutations, descent vectors (U-words) and words in the even generators.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        (0..v.len())
            .map(|a| (a + 1..v.len()).filter(|&b| v[a] > v[b]).count())
            .sum()
    }

    /// Right multiplication by `s_i`: swaps positions `i` and `i + 1`.
    pub fn mul_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Product of simple transpositions `s_{w_1} s_{w_2} ...`.
    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        word.iter()
            .fold(Permutation::identity(n), |p, &i| p.mul_simple(i))
    }

    pub fn is_even(&self) -> bool {
        self.length().is_multiple_of(2)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Descent vector `(d_2, ..., d_n)` with `0 <= d_i <= i - 1`, standing for
/// `U_{2,d_2} U_{3,d_3} ... U_{n,d_n}` with `U_{i,d} = s_{i-1} s_{i-2} ... s_{i-d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UWord {
    descents: Vec<usize>,
}

impl UWord {
    /// `descents[0]` is `d_2`.
    pub fn new(descents: Vec<usize>) -> Result<Self> {
        for (idx, &d) in descents.iter().enumerate() {
            let i = idx + 2;
            if d > i - 1 {
                return Err(Error::InvalidInput(format!("d_{i} = {d} exceeds {}", i - 1)));
            }
        }
        Ok(UWord { descents })
    }

    pub fn descents(&self) -> &[usize] {
        &self.descents
    }

    pub fn n(&self) -> usize {
        self.descents.len() + 1
    }

    /// Word length, `sum d_i`.
    pub fn length(&self) -> usize {
        self.descents.iter().sum()
    }

    /// Generator indices of the reduced word, left to right.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length());
        for (idx, &d) in self.descents.iter().enumerate() {
            let i = idx + 2;
            out.extend((i - d..i).rev());
        }
        out
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_word(self.n(), &self.letters())
    }
}

/// `d_i` counts the entries smaller than `i` standing to the right of `i`.
pub fn normal_reduced_expression(sigma: &Permutation) -> UWord {
    let v = sigma.images();
    let pos = |value: usize| v.iter().position(|&x| x == value).expect("bijection");
    let descents = (2..=v.len())
        .map(|i| v[pos(i) + 1..].iter().filter(|&&x| x < i).count())
        .collect();
    UWord { descents }
}

/// All descent vectors, lexicographic order.
pub fn enumerate_uwords(n: usize) -> Vec<UWord> {
    let mut out = vec![Vec::new()];
    for i in 2..=n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..i).map(move |d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|descents| UWord { descents }).collect()
}

/// Descent vectors of even length; `n!/2` of them for `n >= 2`.
pub fn enumerate_even_uwords(n: usize) -> Vec<UWord> {
    enumerate_uwords(n)
        .into_iter()
        .filter(|w| w.length() % 2 == 0)
        .collect()
}

/// A word in `y_1, ..., y_{n-2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YWord {
    letters: Vec<usize>,
}

impl YWord {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i + 2 > n) {
            return Err(Error::InvalidInput(format!(
                "y{bad} is not a generator for n = {n} (valid: y1..y{})",
                n.saturating_sub(2)
            )));
        }
        Ok(YWord { letters })
    }

    /// Parses whitespace-separated letters such as `"y1 y2 y1"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.strip_prefix('y')
                    .and_then(|rest| rest.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad letter {tok:?} (expected y<k>)")))
            })
            .collect::<Result<Vec<_>>>()?;
        YWord::new(letters, n)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for YWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|i| format!("y{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}
