use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{UniPolyQ, UniPolyZ};

/// `sum_j c_j(alpha) x^(n-j)` with integer coefficients. Entry `j` of the
/// coefficient list is the alpha-polynomial multiplying `x^(n-j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPolyZ {
    coeffs: Vec<UniPolyZ>,
}

impl BiPolyZ {
    /// `coeffs[j]` multiplies `x^(n-j)`, so `n = coeffs.len() - 1`.
    pub fn new(coeffs: Vec<UniPolyZ>) -> Self {
        assert!(!coeffs.is_empty(), "a bivariate polynomial needs at least one x-coefficient");
        BiPolyZ { coeffs }
    }

    /// x-degree.
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The alpha-polynomial multiplying `x^(n-j)`.
    pub fn coeff(&self, j: usize) -> &UniPolyZ {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[UniPolyZ] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0] == UniPolyZ::one()
    }

    /// Largest alpha-degree among the coefficients.
    pub fn alpha_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    /// Substitutes `alpha = a`; the result is in `x`, lowest power first.
    pub fn eval_alpha(&self, a: &BigRational) -> UniPolyQ {
        let n = self.n();
        UniPolyQ::new((0..=n).map(|k| self.coeffs[n - k].eval_rational(a)).collect())
    }

    /// Substitutes an integer `alpha = a`.
    pub fn eval_alpha_int(&self, a: &BigInt) -> UniPolyZ {
        let n = self.n();
        UniPolyZ::new((0..=n).map(|k| self.coeffs[n - k].eval(a)).collect())
    }
}

/// Renders `p` in `var`, highest power first: `556*a^2 + 36*a - 18`.
pub fn render_uni(p: &UniPolyZ, var: &str) -> String {
    let mut out = String::new();
    if p.is_zero() {
        return "0".into();
    }
    for k in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[k];
        if c.is_zero() {
            continue;
        }
        let first = out.is_empty();
        match (first, c.is_negative()) {
            (true, true) => out.push('-'),
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
            (true, false) => {}
        }
        let mag = c.abs();
        write_monomial(&mut out, &mag.to_string(), mag.is_one(), var, k);
    }
    out
}

fn write_monomial(out: &mut String, mag: &str, unit: bool, var: &str, k: usize) {
    match k {
        0 => out.push_str(mag),
        _ => {
            if !unit {
                let _ = write!(out, "{mag}*");
            }
            out.push_str(var);
            if k > 1 {
                let _ = write!(out, "^{k}");
            }
        }
    }
}

/// Renders a rational polynomial in `x`: `x^2 - 1/2*x + 3`.
pub fn render_rational(p: &UniPolyQ, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for k in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[k];
        if c.is_zero() {
            continue;
        }
        match (out.is_empty(), c.is_negative()) {
            (true, true) => out.push('-'),
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
            (true, false) => {}
        }
        let mag = c.abs();
        write_monomial(&mut out, &mag.to_string(), mag.is_one(), var, k);
    }
    out
}

/// Canonical text: decreasing powers of `x`; each alpha-polynomial in
/// decreasing powers of `a`. A multi-term coefficient is parenthesised with
/// its leading sign pulled out, so `-(4806*a^3 + ...)*x^6` renders as
/// `- (4806*a^3 + ...)*x^6`.
impl fmt::Display for BiPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - j;
            let negative = c.leading().is_some_and(|l| l.is_negative());
            let body = if negative { -c } else { c.clone() };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
                (true, false) => {}
            }
            let terms = body.coeffs().iter().filter(|t| !t.is_zero()).count();
            let x_part = match power {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{power}"),
            };
            if terms > 1 {
                let _ = write!(out, "({})", render_uni(&body, "a"));
                if !x_part.is_empty() {
                    let _ = write!(out, "*{x_part}");
                }
            } else {
                let rendered = render_uni(&body, "a");
                match (rendered.as_str(), x_part.is_empty()) {
                    (r, true) => out.push_str(r),
                    ("1", false) => out.push_str(&x_part),
                    (r, false) => {
                        let _ = write!(out, "{r}*{x_part}");
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Parses the canonical text form (and looser spacing of it) back into a
/// polynomial. Accepts terms `[+|-] coeff [* x[^k]]` where `coeff` is an
/// integer, `a`-monomial, or a parenthesised `a`-polynomial.
pub fn parse_bipoly(text: &str) -> Result<BiPolyZ, String> {
    let mut p = Parser { s: text.as_bytes(), i: 0 };
    let mut terms: Vec<(usize, UniPolyZ)> = Vec::new();
    p.skip_ws();
    let mut first = true;
    while p.i < p.s.len() {
        let mut sign = 1;
        match p.peek() {
            Some(b'+') => {
                p.i += 1;
            }
            Some(b'-') => {
                p.i += 1;
                sign = -1;
            }
            _ if first => {}
            other => return Err(p.err(&format!("expected + or -, found {other:?}"))),
        }
        first = false;
        p.skip_ws();
        let coeff = if p.peek() == Some(b'(') {
            p.i += 1;
            let inner = p.alpha_poly()?;
            p.expect(b')')?;
            inner
        } else if p.peek() == Some(b'x') {
            UniPolyZ::one()
        } else {
            p.alpha_term()?
        };
        p.skip_ws();
        let mut power = 0;
        if p.peek() == Some(b'*') {
            p.i += 1;
            p.skip_ws();
        }
        if p.peek() == Some(b'x') {
            p.i += 1;
            power = p.exponent()?;
        }
        let coeff = if sign < 0 { -&coeff } else { coeff };
        terms.push((power, coeff));
        p.skip_ws();
    }
    let n = terms.iter().map(|t| t.0).max().ok_or("empty polynomial")?;
    let mut coeffs = vec![UniPolyZ::default(); n + 1];
    for (power, c) in terms {
        coeffs[n - power] = &coeffs[n - power] + &c;
    }
    Ok(BiPolyZ::new(coeffs))
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.i += 1;
        }
    }

    fn err(&self, msg: &str) -> String {
        format!("{msg} at byte {}", self.i)
    }

    fn expect(&mut self, b: u8) -> Result<(), String> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.i;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i]).ok()?.parse().ok()
    }

    fn exponent(&mut self) -> Result<usize, String> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.i += 1;
        self.integer()
            .and_then(|k| usize::try_from(k).ok())
            .ok_or_else(|| self.err("bad exponent"))
    }

    /// `int`, `a[^k]` or `int*a[^k]`, unsigned.
    fn alpha_term(&mut self) -> Result<UniPolyZ, String> {
        let mag = if self.peek() == Some(b'a') {
            BigInt::one()
        } else {
            let m = self.integer().ok_or_else(|| self.err("expected a coefficient"))?;
            self.skip_ws();
            if self.peek() == Some(b'*') && self.s.get(self.i + 1..).is_some_and(|r| {
                r.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'a')
            }) {
                self.i += 1;
                self.skip_ws();
            } else {
                return Ok(UniPolyZ::constant(m));
            }
            m
        };
        if self.peek() != Some(b'a') {
            return Err(self.err("expected 'a'"));
        }
        self.i += 1;
        let k = self.exponent()?;
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = mag;
        Ok(UniPolyZ::new(c))
    }

    fn alpha_poly(&mut self) -> Result<UniPolyZ, String> {
        let mut acc = UniPolyZ::default();
        self.skip_ws();
        let mut first = true;
        loop {
            self.skip_ws();
            let neg = match self.peek() {
                Some(b'-') => {
                    self.i += 1;
                    true
                }
                Some(b'+') => {
                    self.i += 1;
                    false
                }
                Some(b')') | None if !first => return Ok(acc),
                _ if first => false,
                _ => return Err(self.err("expected + or -")),
            };
            first = false;
            self.skip_ws();
            let t = self.alpha_term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
        }
    }
}
