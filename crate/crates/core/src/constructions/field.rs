//! Lookup-table arithmetic for small finite fields.

use crate::error::{Error, Result};

/// Monic irreducible polynomials for the non-prime orders, coefficients low to high.
const MODULI: &[(usize, usize, &[usize])] = &[
    (4, 2, &[1, 1, 1]),
    (8, 2, &[1, 1, 0, 1]),
    (9, 3, &[1, 0, 1]),
    (16, 2, &[1, 1, 0, 0, 1]),
    (25, 5, &[2, 0, 1]),
    (27, 3, &[1, 2, 0, 1]),
    (32, 2, &[1, 0, 1, 0, 0, 1]),
];

const PRIMES: &[usize] = &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

/// Orders accepted by [`FiniteFieldTable::new`].
pub fn supported_orders() -> Vec<usize> {
    let mut all: Vec<usize> = PRIMES
        .iter()
        .copied()
        .chain(MODULI.iter().map(|m| m.0))
        .collect();
    all.sort_unstable();
    all
}

/// Addition and multiplication tables of GF(q) over labels `0..q`.
///
/// Label `0` is the additive and label `1` the multiplicative identity. For
/// `q = p^e` the label `c_0 + c_1 p + ... ` stands for the polynomial
/// `c_0 + c_1 x + ...` reduced modulo a fixed irreducible polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFieldTable {
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl FiniteFieldTable {
    pub fn new(q: usize) -> Result<Self> {
        let table = if PRIMES.contains(&q) {
            Self::tabulate(q, |a, b| (a + b) % q, |a, b| (a * b) % q)
        } else if let Some(&(_, p, modulus)) = MODULI.iter().find(|m| m.0 == q) {
            let degree = modulus.len() - 1;
            let digits =
                |x: usize| -> Vec<usize> { (0..degree).map(|i| x / p.pow(i as u32) % p).collect() };
            let label = |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &d| acc * p + d) };
            Self::tabulate(
                q,
                |a, b| {
                    let s: Vec<usize> = digits(a)
                        .iter()
                        .zip(digits(b))
                        .map(|(x, y)| (x + y) % p)
                        .collect();
                    label(&s)
                },
                |a, b| {
                    let (da, db) = (digits(a), digits(b));
                    let mut prod = vec![0usize; 2 * degree - 1];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    // reduce by the monic modulus from the top degree down
                    for top in (degree..prod.len()).rev() {
                        let c = prod[top];
                        if c != 0 {
                            for (i, &mc) in modulus.iter().enumerate() {
                                let idx = top - degree + i;
                                prod[idx] = (prod[idx] + (p - c) * mc) % p;
                            }
                        }
                    }
                    label(&prod[..degree])
                },
            )
        } else {
            return Err(Error::UnsupportedOrder(q));
        };
        table.check_axioms();
        Ok(table)
    }

    fn tabulate(
        q: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut t = FiniteFieldTable {
            order: q,
            add: vec![0; q * q],
            mul: vec![0; q * q],
        };
        for a in 0..q {
            for b in 0..q {
                t.add[a * q + b] = add(a, b) as u8;
                t.mul[a * q + b] = mul(a, b) as u8;
            }
        }
        t
    }

    /// Panics if the tables do not form a field; a failure means a bad modulus entry.
    fn check_axioms(&self) {
        let q = self.order;
        for a in 0..q {
            assert_eq!(self.add(a, 0), a, "0 is not additive identity in GF({q})");
            assert_eq!(
                self.mul(a, 1),
                a,
                "1 is not multiplicative identity in GF({q})"
            );
            assert!(
                (0..q).any(|b| self.add(a, b) == 0),
                "no additive inverse in GF({q})"
            );
            if a != 0 {
                assert!(
                    (0..q).any(|b| self.mul(a, b) == 1),
                    "no multiplicative inverse in GF({q})"
                );
            }
            for b in 0..q {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                for c in 0..q {
                    assert_eq!(self.add(self.add(a, b), c), self.add(a, self.add(b, c)));
                    assert_eq!(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c))
                    );
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }
}
