//! Generator words.
//!
//! Text format: `;`-separated tokens `e(i,j,r)`, `rl(i,a)` (long root
//! `rho_{i, sigma i}`), `rs(i,j,a)` (short root `rho_ij`), each optionally
//! followed by `^-1`. Parameters use the ring's literal grammar.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::{elementary_matrix, sigma, unitary_generator, FormKind};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring};

/// Which generated group a word lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// `E_n(R)`, words in `e_ij(r)`.
    Elementary,
    /// `ESp_2n(R)`.
    Symplectic,
    /// `EO(n,n)(R)`.
    Orthogonal,
}

impl GroupKind {
    pub fn form(self) -> Option<FormKind> {
        match self {
            GroupKind::Elementary => None,
            GroupKind::Symplectic => Some(FormKind::Symplectic),
            GroupKind::Orthogonal => Some(FormKind::Orthogonal),
        }
    }

    /// Matrix size for parameter `n`.
    pub fn size(self, n: usize) -> usize {
        match self {
            GroupKind::Elementary => n,
            _ => 2 * n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Elementary => "en",
            GroupKind::Symplectic => "esp",
            GroupKind::Orthogonal => "eo",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "en" => Ok(GroupKind::Elementary),
            "esp" => Ok(GroupKind::Symplectic),
            "eo" => Ok(GroupKind::Orthogonal),
            _ => {
                Err(Error::InvalidParam { name: "group".into(), reason: format!("expected en, esp or eo, got `{s}`") })
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Elem,
    RhoLong,
    RhoShort,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Token {
    pub tag: Tag,
    pub i: usize,
    /// For [`Tag::RhoLong`] this is `sigma i`.
    pub j: usize,
    pub param: Elem,
    pub inverse: bool,
}

impl Token {
    /// The parameter with the exponent folded in.
    pub fn effective_param(&self) -> Elem {
        if self.inverse {
            -&self.param
        } else {
            self.param.clone()
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            Tag::Elem => write!(f, "e({},{},{})", self.i, self.j, self.param)?,
            Tag::RhoLong => write!(f, "rl({},{})", self.i, self.param)?,
            Tag::RhoShort => write!(f, "rs({},{},{})", self.i, self.j, self.param)?,
        }
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A product of generators, evaluated left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorWord {
    ring: Ring,
    group: GroupKind,
    n: usize,
    tokens: Vec<Token>,
}

impl GeneratorWord {
    pub fn new(ring: Ring, group: GroupKind, n: usize, tokens: Vec<Token>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParam { name: "n".into(), reason: "must be at least 1".into() });
        }
        let w = GeneratorWord { ring, group, n, tokens };
        for t in &w.tokens {
            w.validate(t)?;
        }
        Ok(w)
    }

    pub fn identity(ring: Ring, group: GroupKind, n: usize) -> Result<Self> {
        GeneratorWord::new(ring, group, n, Vec::new())
    }

    fn validate(&self, t: &Token) -> Result<()> {
        let size = self.size();
        let bad = |msg: String| Err(Error::MalformedWord(format!("{t}: {msg}")));
        if t.i == 0 || t.j == 0 || t.i > size || t.j > size {
            return bad(format!("indices must lie in 1..={size}"));
        }
        if t.i == t.j {
            return bad("indices must differ".into());
        }
        self.ring.check(&t.param)?;
        match (t.tag, self.group) {
            (Tag::Elem, GroupKind::Elementary) => Ok(()),
            (Tag::Elem, _) => bad("elementary tokens belong to en words".into()),
            (_, GroupKind::Elementary) => bad("rho tokens belong to esp or eo words".into()),
            (Tag::RhoLong, GroupKind::Orthogonal) => bad("long root generators are not orthogonal".into()),
            (Tag::RhoLong, _) if t.j != sigma(self.n, t.i) => bad("long root token must pair i with sigma i".into()),
            (Tag::RhoShort, _) if t.j == sigma(self.n, t.i) => bad("short root token needs j != sigma i".into()),
            _ => Ok(()),
        }
    }

    /// Parses the text format; the empty string is the empty word.
    pub fn parse(ring: Ring, group: GroupKind, n: usize, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let tokens = compact
            .split(';')
            .filter(|s| !s.is_empty())
            .map(|s| parse_token(ring, group, n, s))
            .collect::<Result<Vec<_>>>()?;
        GeneratorWord::new(ring, group, n, tokens)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix size: `n` for `E_n`, `2n` otherwise.
    pub fn size(&self) -> usize {
        self.group.size(self.n)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn token_matrix(&self, t: &Token) -> Result<Matrix> {
        let a = t.effective_param();
        match self.group.form() {
            None => elementary_matrix(self.ring, self.n, t.i, t.j, &a),
            Some(kind) => unitary_generator(self.ring, self.n, kind, t.i, t.j, &a),
        }
    }

    /// The ordered product of the token matrices.
    pub fn evaluate(&self) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.ring, self.size());
        for t in &self.tokens {
            acc = acc.mul(&self.token_matrix(t)?)?;
        }
        Ok(acc)
    }

    /// The reversed word with every exponent flipped.
    pub fn inverse(&self) -> GeneratorWord {
        let tokens = self.tokens.iter().rev().map(|t| Token { inverse: !t.inverse, ..t.clone() }).collect();
        GeneratorWord { tokens, ..self.clone() }
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &GeneratorWord) -> Result<GeneratorWord> {
        if (self.ring, self.group, self.n) != (other.ring, other.group, other.n) {
            return Err(Error::MalformedWord("cannot concatenate words of different groups".into()));
        }
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().cloned());
        Ok(GeneratorWord { tokens, ..self.clone() })
    }

    /// A uniformly random admissible token with parameter of size at most
    /// `bound`.
    ///
    /// # Panics
    /// For the orthogonal group with `n = 1`, which has no generators.
    pub fn random_token<R: Rng + ?Sized>(ring: Ring, group: GroupKind, n: usize, rng: &mut R, bound: u64) -> Token {
        assert!(group.size(n) >= 2 && !(group == GroupKind::Orthogonal && n < 2), "no admissible generators");
        let size = group.size(n);
        let (i, j) = loop {
            let i = rng.random_range(1..=size);
            let j = rng.random_range(1..=size);
            if i == j || (group == GroupKind::Orthogonal && j == sigma(n, i)) {
                continue;
            }
            break (i, j);
        };
        let tag = match group {
            GroupKind::Elementary => Tag::Elem,
            _ if j == sigma(n, i) => Tag::RhoLong,
            _ => Tag::RhoShort,
        };
        Token { tag, i, j, param: ring.sample(rng, bound), inverse: rng.random_bool(0.5) }
    }

    /// A random word of length `1..=max_len`.
    pub fn random<R: Rng + ?Sized>(
        ring: Ring,
        group: GroupKind,
        n: usize,
        rng: &mut R,
        max_len: usize,
        bound: u64,
    ) -> Result<Self> {
        if group.size(n) < 2 || (group == GroupKind::Orthogonal && n < 2) {
            return Err(Error::InvalidParam {
                name: "n".into(),
                reason: format!("{group} has no generators for n = {n}"),
            });
        }
        let len = rng.random_range(1..=max_len.max(1));
        let tokens = (0..len).map(|_| GeneratorWord::random_token(ring, group, n, rng, bound)).collect();
        GeneratorWord::new(ring, group, n, tokens)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.tokens.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn parse_token(ring: Ring, group: GroupKind, n: usize, s: &str) -> Result<Token> {
    let malformed = || Error::MalformedWord(format!("cannot parse token `{s}`"));
    let (body, inverse) = match s.strip_suffix("^-1") {
        Some(b) => (b, true),
        None => (s, false),
    };
    let open = body.find('(').ok_or_else(malformed)?;
    let args = body[open + 1..].strip_suffix(')').ok_or_else(malformed)?;
    let parts: Vec<&str> = args.split(',').collect();
    let index = |p: &str| p.parse::<usize>().map_err(|_| malformed());
    let (tag, i, j, lit) = match (&body[..open], parts.as_slice()) {
        ("e", [i, j, r]) => (Tag::Elem, index(i)?, index(j)?, *r),
        ("rs", [i, j, a]) => (Tag::RhoShort, index(i)?, index(j)?, *a),
        ("rl", [i, a]) => {
            let i = index(i)?;
            if i == 0 || i > group.size(n) {
                return Err(Error::MalformedWord(format!("{s}: index outside 1..={}", group.size(n))));
            }
            (Tag::RhoLong, i, sigma(n, i), *a)
        }
        _ => return Err(malformed()),
    };
    let param = ring.parse_element(lit)?;
    Ok(Token { tag, i, j, param, inverse })
}
