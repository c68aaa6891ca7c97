use std::fmt;

/// An integer polynomial in one variable, coefficients low to high with no
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CountingPolynomial {
    coeffs: Vec<i128>,
}

impl CountingPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CountingPolynomial { coeffs }
    }

    pub fn constant(c: i128) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn var() -> Self {
        Self::new(vec![0, 1])
    }

    /// `x + c`
    pub fn linear(c: i128) -> Self {
        Self::new(vec![c, 1])
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Degree, with the zero polynomial at `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| acc.mul(self))
    }

    /// `p(x + c)`
    pub fn shift(&self, c: i128) -> Self {
        let step = Self::linear(c);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::default(), |acc, &a| acc.mul(&step).add(&Self::constant(a)))
    }

    /// Renders with the given variable name, lowest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let mag = c.unsigned_abs();
            let body = match (mag, k) {
                (_, 0) => mag.to_string(),
                (1, _) => mono,
                _ => format!("{mag}{mono}"),
            };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for CountingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let q = CountingPolynomial::var();
        let p = q.add(&CountingPolynomial::constant(-1)).mul(&q).mul(&q.add(&CountingPolynomial::constant(1)));
        assert_eq!(p.coeffs(), &[0, -1, 0, 1]);
        assert_eq!(p.to_string(), "-q + q^3");
        assert_eq!(p.eval(3), 24);
        assert_eq!(p.shift(1).eval(2), 24);
        assert_eq!(CountingPolynomial::linear(1).pow(3).coeffs(), &[1, 3, 3, 1]);
        assert_eq!(CountingPolynomial::default().degree(), None);
    }
}
