//! The finite simple classical groups: specifications, closed-form
//! invariants and standard generating matrices.

mod generators;
mod matrix;

pub use generators::{standard_generators, FormKind, MatrixRep};
pub use matrix::Matrix;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numthy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "psl")]
    Psl,
    #[serde(rename = "psu")]
    Psu,
    #[serde(rename = "psp")]
    Psp,
    #[serde(rename = "pomega")]
    POmega,
    #[serde(rename = "pomega-plus")]
    POmegaPlus,
    #[serde(rename = "pomega-minus")]
    POmegaMinus,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Psl,
        Family::Psu,
        Family::Psp,
        Family::POmega,
        Family::POmegaPlus,
        Family::POmegaMinus,
    ];

    /// Lower-case identifier used on the command line and in CSV output.
    pub fn id(self) -> &'static str {
        match self {
            Family::Psl => "psl",
            Family::Psu => "psu",
            Family::Psp => "psp",
            Family::POmega => "pomega",
            Family::POmegaPlus => "pomega-plus",
            Family::POmegaMinus => "pomega-minus",
        }
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(
            self,
            Family::POmega | Family::POmegaPlus | Family::POmegaMinus
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Psl => "PSL",
            Family::Psu => "PSU",
            Family::Psp => "PSp",
            Family::POmega => "POmega",
            Family::POmegaPlus => "POmega+",
            Family::POmegaMinus => "POmega-",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Ok(match key.as_str() {
            "psl" | "l" => Family::Psl,
            "psu" | "u" => Family::Psu,
            "psp" | "s" => Family::Psp,
            "pomega" | "omega" | "o" => Family::POmega,
            "pomega-plus" | "pomegaplus" | "pomega+" | "omega+" | "o+" => Family::POmegaPlus,
            "pomega-minus" | "pomegaminus" | "pomega-" | "omega-" | "o-" => Family::POmegaMinus,
            _ => return Err(Error::InvalidSpec(format!("unknown family '{s}'"))),
        })
    }
}

/// A simple classical group `family_n(q)` with `q = p^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    family: Family,
    n: u32,
    q: u64,
    p: u64,
    f: u32,
}

impl GroupSpec {
    /// Build and validate a spec; rejects groups that are not simple or
    /// that fall outside the rows tabulated for the family.
    pub fn new(family: Family, n: u32, q: u64) -> Result<Self> {
        let spec = Self::unchecked(family, n, q)?;
        spec.validate()?;
        Ok(spec)
    }

    /// A spec whose field size is a prime power but whose dimension
    /// conditions are not enforced. Small orthogonal groups built this way
    /// are isomorphic to other classical groups and serve as cross-checks.
    pub fn unchecked(family: Family, n: u32, q: u64) -> Result<Self> {
        let (p, f) = numthy::prime_power(q)
            .ok_or_else(|| Error::InvalidSpec(format!("q = {q} is not a prime power")))?;
        if n == 0 {
            return Err(Error::InvalidSpec("dimension must be positive".into()));
        }
        Ok(GroupSpec { family, n, q, p, f })
    }

    pub fn family(&self) -> Family {
        self.family
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn f(&self) -> u32 {
        self.f
    }

    /// `q^n` as an exact integer.
    pub fn q_pow_n(&self) -> BigUint {
        BigUint::from(self.q).pow(self.n)
    }

    pub fn validate(&self) -> Result<()> {
        let (n, q) = (self.n, self.q);
        let fail = |cond: &str| {
            Err(Error::InvalidSpec(format!(
                "{self} violates the condition for {}: {cond}",
                self.family
            )))
        };
        match self.family {
            Family::Psl => {
                if n < 2 {
                    return fail("n >= 2");
                }
                if n == 2 && (q == 2 || q == 3) {
                    return fail("(n,q) != (2,2) or (2,3)");
                }
            }
            Family::Psu => {
                if n < 3 {
                    return fail("n >= 3");
                }
                if n == 3 && q == 2 {
                    return fail("(n,q) != (3,2)");
                }
            }
            Family::Psp => {
                if n < 4 || n % 2 == 1 {
                    return fail("n >= 4 even");
                }
                if n == 4 && q == 2 {
                    return fail("(n,q) != (4,2)");
                }
            }
            Family::POmega => {
                if n < 7 || n % 2 == 0 {
                    return fail("n >= 7 odd");
                }
                if q % 2 == 0 {
                    return fail("q odd");
                }
            }
            Family::POmegaPlus | Family::POmegaMinus => {
                if n < 8 || n % 2 == 1 {
                    return fail("n >= 8 even");
                }
            }
        }
        Ok(())
    }

    /// The exponent `e` such that elements of order `r ∈ ppd(p, e·f)` are
    /// used to build connection sets.
    pub fn ppd_exponent(&self) -> u32 {
        let n = self.n;
        match self.family {
            Family::Psl | Family::Psp => n,
            Family::Psu if n % 2 == 1 => 2 * n,
            Family::Psu => 2 * (n - 1),
            Family::POmega => n - 1,
            Family::POmegaPlus => n - 2,
            Family::POmegaMinus => n,
        }
    }

    /// The primes in `ppd(p, e·f)`, smallest first.
    pub fn ppd_primes(&self) -> Result<Vec<u128>> {
        numthy::ppd(self.p, self.ppd_exponent() * self.f)
    }

    /// Dimension of the natural module and the size of the field it is
    /// defined over (`q²` for unitary groups).
    pub fn natural_module(&self) -> (u32, u64) {
        match self.family {
            Family::Psu => (self.n, self.q * self.q),
            _ => (self.n, self.q),
        }
    }

    /// Number of 1-spaces of the natural module.
    pub fn projective_degree(&self) -> BigUint {
        let (n, qq) = self.natural_module();
        (BigUint::from(qq).pow(n) - 1u32) / BigUint::from(qq - 1)
    }

    pub fn group_order(&self) -> BigUint {
        let q = BigUint::from(self.q);
        let qi = |i: u32| q.clone().pow(i);
        let n = self.n;
        let big = |x: u64| BigUint::from(x);
        let gcd = |a: u64, b: &BigUint| BigUint::from(a).gcd(b);
        match self.family {
            Family::Psl => {
                let mut o = qi(n * (n - 1) / 2);
                for i in 2..=n {
                    o *= qi(i) - 1u32;
                }
                o / gcd(n as u64, &(q.clone() - 1u32))
            }
            Family::Psu => {
                let mut o = qi(n * (n - 1) / 2);
                for i in 2..=n {
                    if i % 2 == 0 {
                        o *= qi(i) - 1u32;
                    } else {
                        o *= qi(i) + 1u32;
                    }
                }
                o / gcd(n as u64, &(q.clone() + 1u32))
            }
            Family::Psp => {
                let m = n / 2;
                let mut o = qi(m * m);
                for i in 1..=m {
                    o *= qi(2 * i) - 1u32;
                }
                o / gcd(2, &(q.clone() - 1u32))
            }
            Family::POmega => {
                let m = (n - 1) / 2;
                let mut o = qi(m * m);
                for i in 1..=m {
                    o *= qi(2 * i) - 1u32;
                }
                o / gcd(2, &(q.clone() - 1u32))
            }
            Family::POmegaPlus | Family::POmegaMinus => {
                let m = n / 2;
                let mut o = qi(m * (m - 1));
                for i in 1..m {
                    o *= qi(2 * i) - 1u32;
                }
                let top = if self.family == Family::POmegaPlus {
                    qi(m) - 1u32
                } else {
                    qi(m) + 1u32
                };
                let d = big(4).gcd(&top);
                o * top / d
            }
        }
    }

    /// `|PSO^ε_n(q) : PΩ^ε_n(q)|` for even `n`.
    fn pso_index(&self) -> u64 {
        if self.q.is_multiple_of(2) {
            return 2;
        }
        let qm = BigUint::from(self.q).pow(self.n / 2);
        let shifted = if self.family == Family::POmegaPlus {
            qm - 1u32
        } else {
            qm + 1u32
        };
        if (shifted % 4u32).is_zero() {
            2
        } else {
            1
        }
    }

    /// Closed-form `|N_G(⟨x⟩)|` for `x` of order `r ∈ ppd(p, e·f)`.
    pub fn normalizer_order_formula(&self) -> Result<BigUint> {
        let ef = self.ppd_exponent() * self.f;
        if self.ppd_primes()?.is_empty() {
            return Err(Error::EmptyPpd { p: self.p, m: ef });
        }
        Ok(self.normalizer_order_unchecked())
    }

    fn normalizer_order_unchecked(&self) -> BigUint {
        let q = self.q;
        let bq = BigUint::from(q);
        let n = self.n;
        let nb = BigUint::from(n);
        let g = |a: u64, b: u64| num_integer::gcd(a, b);
        let gcd2 = g(2, q - 1) as u32;
        match self.family {
            Family::Psl => nb * (bq.clone().pow(n) - 1u32) / ((bq - 1u32) * g(n as u64, q - 1)),
            Family::Psu if n % 2 == 1 => {
                nb * (bq.clone().pow(n) + 1u32) / ((bq + 1u32) * g(n as u64, q + 1))
            }
            Family::Psu => BigUint::from(n - 1) * (bq.pow(n - 1) + 1u32) / g(n as u64, q + 1),
            Family::Psp => nb * (bq.pow(n / 2) + 1u32) / gcd2,
            Family::POmega => BigUint::from(n - 1) * (bq.pow((n - 1) / 2) + 1u32) / 2u32,
            Family::POmegaPlus => {
                BigUint::from(2 * (n - 2)) * (bq.clone().pow(n / 2 - 1) + 1u32) * (bq + 1u32)
                    / (gcd2 * gcd2 * self.pso_index() as u32)
            }
            Family::POmegaMinus => {
                nb * (bq.pow(n / 2) + 1u32) / (gcd2 * gcd2 * self.pso_index() as u32)
            }
        }
    }

    /// The lower bound `i(G) ≤ i₂(G)` on the number of involutions.
    pub fn involution_lower_bound(&self) -> BigRational {
        let n = self.n;
        let (num_exp, den) = match self.family {
            Family::Psl | Family::Psu => (n * n / 2, 8u32),
            Family::Psp => (n * n / 4 + n / 2, 2),
            Family::POmega => ((n * n - 1) / 4, 2),
            Family::POmegaPlus | Family::POmegaMinus => (n * n / 4 - 1, 8),
        };
        BigRational::new(
            BigUint::from(self.q).pow(num_exp).into(),
            BigUint::from(den).into(),
        )
    }

    /// `dim(Y)` and `N` whose difference is the exponent in `j(G)`.
    pub fn aut_involution_parameters(&self) -> (u32, u32) {
        let n = self.n;
        match self.family {
            Family::Psl | Family::Psu => (n * n - 1, n * (n - 1) / 2),
            Family::Psp => (n * (n + 1) / 2, n * n / 4),
            Family::POmega => (n * (n - 1) / 2, (n - 1) * (n - 1) / 4),
            Family::POmegaPlus | Family::POmegaMinus => (n * (n - 1) / 2, n * (n - 2) / 4),
        }
    }

    /// The upper bound `i₂(Aut G) < j(G) = 3q^{dim Y − N}`.
    pub fn involution_upper_bound_aut(&self) -> BigUint {
        let (dim_y, big_n) = self.aut_involution_parameters();
        BigUint::from(self.q).pow(dim_y - big_n) * 3u32
    }

    /// The smallest index of a proper subgroup.
    pub fn min_subgroup_index(&self) -> Result<BigUint> {
        let q = self.q;
        let n = self.n;
        let bq = BigUint::from(q);
        let qi = |i: u32| bq.clone().pow(i);
        let b = BigUint::from;
        Ok(match self.family {
            Family::Psl => match (n, q) {
                (2, 5) => b(5u32),
                (2, 7) => b(7u32),
                (2, 9) => b(6u32),
                (2, 11) => b(11u32),
                (4, 2) => b(8u32),
                _ => (qi(n) - 1u32) / (bq.clone() - 1u32),
            },
            Family::Psu => match n {
                3 if q == 5 => b(50u32),
                3 => qi(3) + 1u32,
                4 => (bq.clone() + 1u32) * (qi(3) + 1u32),
                _ if q == 2 && n.is_multiple_of(2) => {
                    BigUint::from(2u32).pow(n - 1) * (BigUint::from(2u32).pow(n) - 1u32) / 3u32
                }
                _ => {
                    let signed = |k: u32| {
                        if k.is_multiple_of(2) {
                            qi(k) - 1u32
                        } else {
                            qi(k) + 1u32
                        }
                    };
                    signed(n) * signed(n - 1) / (qi(2) - 1u32)
                }
            },
            Family::Psp => {
                let m = n / 2;
                if (n, q) == (4, 3) {
                    b(27u32)
                } else if q == 2 {
                    BigUint::from(2u32).pow(m - 1) * (BigUint::from(2u32).pow(m) - 1u32)
                } else {
                    (qi(n) - 1u32) / (bq.clone() - 1u32)
                }
            }
            Family::POmega => {
                let m = (n - 1) / 2;
                if m < 3 {
                    return Err(Error::InvalidSpec(format!(
                        "no minimal-index formula for {self}"
                    )));
                }
                if q == 3 {
                    qi(m) * (qi(m) - 1u32) / 2u32
                } else {
                    (qi(2 * m) - 1u32) / (bq.clone() - 1u32)
                }
            }
            Family::POmegaPlus => {
                let m = n / 2;
                if m < 4 {
                    return Err(Error::InvalidSpec(format!(
                        "no minimal-index formula for {self}"
                    )));
                }
                if q == 2 {
                    BigUint::from(2u32).pow(m - 1) * (BigUint::from(2u32).pow(m) - 1u32)
                } else {
                    (qi(m) - 1u32) * (qi(m - 1) + 1u32) / (bq.clone() - 1u32)
                }
            }
            Family::POmegaMinus => {
                let m = n / 2;
                if m < 4 {
                    return Err(Error::InvalidSpec(format!(
                        "no minimal-index formula for {self}"
                    )));
                }
                (qi(m) + 1u32) * (qi(m - 1) - 1u32) / (bq.clone() - 1u32)
            }
        })
    }

    /// Whether every proper subgroup has index greater than 47, the
    /// hypothesis under which the generation-and-automorphism criterion is
    /// equivalent to being a GRR.
    pub fn godsil_hypothesis(&self) -> Result<bool> {
        Ok(self.min_subgroup_index()? > BigUint::from(47u32))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}({})", self.family, self.n, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, n: u32, q: u64) -> GroupSpec {
        GroupSpec::new(family, n, q).unwrap()
    }

    #[test]
    fn validation_follows_the_conditions() {
        assert!(GroupSpec::new(Family::Psl, 2, 2).is_err());
        assert!(GroupSpec::new(Family::Psl, 2, 3).is_err());
        assert!(GroupSpec::new(Family::Psp, 4, 2).is_err());
        assert!(GroupSpec::new(Family::Psu, 3, 2).is_err());
        assert!(GroupSpec::new(Family::POmega, 7, 2).is_err());
        assert!(GroupSpec::new(Family::POmega, 8, 3).is_err());
        assert!(GroupSpec::new(Family::POmegaPlus, 6, 2).is_err());
        assert!(GroupSpec::new(Family::Psl, 3, 6).is_err());
        assert!(GroupSpec::new(Family::Psl, 3, 3).is_ok());
        assert!(GroupSpec::new(Family::Psu, 4, 2).is_ok());
        let msg = GroupSpec::new(Family::Psl, 2, 2).unwrap_err().to_string();
        assert!(msg.contains("(2,2)"), "{msg}");
    }

    #[test]
    fn ppd_exponents() {
        assert_eq!(spec(Family::Psl, 3, 3).ppd_exponent(), 3);
        assert_eq!(spec(Family::Psu, 5, 2).ppd_exponent(), 10);
        assert_eq!(spec(Family::Psu, 6, 2).ppd_exponent(), 10);
        assert_eq!(spec(Family::Psp, 6, 2).ppd_exponent(), 6);
        assert_eq!(spec(Family::POmega, 7, 3).ppd_exponent(), 6);
        assert_eq!(spec(Family::POmegaPlus, 10, 2).ppd_exponent(), 8);
        assert_eq!(spec(Family::POmegaMinus, 8, 2).ppd_exponent(), 8);
    }

    #[test]
    fn known_orders() {
        let cases: &[(Family, u32, u64, u64)] = &[
            (Family::Psl, 2, 4, 60),
            (Family::Psl, 2, 5, 60),
            (Family::Psl, 2, 7, 168),
            (Family::Psl, 3, 2, 168),
            (Family::Psl, 2, 9, 360),
            (Family::Psl, 4, 2, 20160),
            (Family::Psl, 3, 4, 20160),
            (Family::Psu, 3, 3, 6048),
            (Family::Psu, 4, 2, 25920),
            (Family::Psp, 4, 3, 25920),
            (Family::Psp, 6, 2, 1451520),
            (Family::POmega, 7, 3, 4585351680),
            (Family::POmegaPlus, 8, 2, 174182400),
            (Family::POmegaMinus, 8, 2, 197406720),
        ];
        for &(fam, n, q, order) in cases {
            assert_eq!(
                spec(fam, n, q).group_order(),
                BigUint::from(order),
                "{fam} {n} {q}"
            );
        }
        let small_omega = GroupSpec::unchecked(Family::POmegaMinus, 4, 3).unwrap();
        assert_eq!(small_omega.group_order(), BigUint::from(360u32));
    }

    #[test]
    fn normalizer_formulas() {
        let v = |f, n, q| {
            spec(f, n, q)
                .normalizer_order_formula()
                .unwrap()
                .to_string()
        };
        assert_eq!(v(Family::Psl, 2, 4), "10");
        assert_eq!(v(Family::Psl, 2, 5), "6");
        assert_eq!(v(Family::Psl, 3, 3), "39");
        assert_eq!(v(Family::Psu, 3, 3), "21");
        assert_eq!(v(Family::Psp, 4, 3), "20");
        assert!(matches!(
            spec(Family::Psl, 6, 2).normalizer_order_formula(),
            Err(Error::EmptyPpd { p: 2, m: 6 })
        ));
    }

    #[test]
    fn involution_bounds() {
        let g = spec(Family::Psl, 2, 7);
        assert_eq!(g.involution_lower_bound().to_string(), "49/8");
        assert_eq!(g.involution_upper_bound_aut(), BigUint::from(147u32));
        let s = spec(Family::Psp, 4, 3);
        assert_eq!(s.involution_lower_bound().to_string(), "729/2");
        assert_eq!(s.involution_upper_bound_aut(), BigUint::from(2187u32));
        let o = spec(Family::POmega, 7, 3);
        assert_eq!(
            o.involution_lower_bound().to_string(),
            format!("{}/2", 3u64.pow(12))
        );
        let plus = spec(Family::POmegaPlus, 8, 2);
        assert_eq!(plus.involution_upper_bound_aut(), BigUint::from(3u32 << 16));
    }

    #[test]
    fn min_indices() {
        let v = |f, n, q| spec(f, n, q).min_subgroup_index().unwrap().to_string();
        assert_eq!(v(Family::Psl, 2, 7), "7");
        assert_eq!(v(Family::Psl, 2, 11), "11");
        assert_eq!(v(Family::Psl, 4, 2), "8");
        assert_eq!(v(Family::Psl, 2, 8), "9");
        assert_eq!(v(Family::Psl, 3, 3), "13");
        assert_eq!(v(Family::Psu, 4, 2), "27");
        assert_eq!(v(Family::Psp, 4, 3), "27");
        assert_eq!(v(Family::Psp, 6, 2), "28");
        assert_eq!(v(Family::Psu, 6, 2), "672");
        assert!(!spec(Family::Psl, 2, 7).godsil_hypothesis().unwrap());
        assert!(!spec(Family::Psl, 3, 4).godsil_hypothesis().unwrap());
        assert!(spec(Family::Psl, 3, 7).godsil_hypothesis().unwrap());
    }
}
