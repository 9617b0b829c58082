use super::{Field, FieldArith};
use crate::error::{Error, Result};

/// Largest field size for which log/exp tables are built.
pub const GF_TABLE_CAP: u128 = 1 << 22;

const NONE: u32 = u32::MAX;

/// Table-driven GF(p^f). Element codes are the canonical indices of
/// [`Field`], so code 0 is zero and code 1 is one.
#[derive(Debug, Clone)]
pub struct Gf {
    field: Field,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[i] = log(1 + g^i)`, or `NONE` when that sum is zero.
    zech: Vec<u32>,
    neg_one_log: u32,
}

impl Gf {
    pub fn new(p: u64, f: u32) -> Result<Self> {
        Self::from_field(Field::new(p, f)?)
    }

    pub fn from_field(field: Field) -> Result<Self> {
        let q = field.order();
        if q > GF_TABLE_CAP {
            return Err(Error::CapExceeded {
                what: "table field size",
                value: q,
                cap: GF_TABLE_CAP,
            });
        }
        let qu = q as usize;
        let p = field.p() as u32;
        let g = field.multiplicative_generator();
        let mut exp = Vec::with_capacity(qu - 1);
        let mut log = vec![NONE; qu];
        let mut cur = field.one();
        for i in 0..qu - 1 {
            let code = field.index(&cur) as u32;
            exp.push(code);
            log[code as usize] = i as u32;
            cur = field.mul(&cur, &g);
        }
        let zech = exp
            .iter()
            .map(|&code| {
                let d0 = code % p;
                let s = code - d0 + (d0 + 1) % p;
                if s == 0 {
                    NONE
                } else {
                    log[s as usize]
                }
            })
            .collect();
        let neg_one_log = if p == 2 { 0 } else { ((q - 1) / 2) as u32 };
        Ok(Gf {
            field,
            q: q as u32,
            exp,
            log,
            zech,
            neg_one_log,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p() as u32
    }

    pub fn degree(&self) -> u32 {
        self.field.degree()
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The primitive element the tables are built on.
    pub fn generator(&self) -> u32 {
        self.exp.get(1).copied().unwrap_or(1)
    }

    #[inline]
    fn units(&self) -> u32 {
        self.q - 1
    }

    #[inline]
    pub fn log(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.log[a as usize]
    }

    #[inline]
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % self.units() as u64) as usize]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        if self.p() == 2 {
            return a ^ b;
        }
        let n = self.units();
        let la = self.log[a as usize];
        let lb = self.log[b as usize];
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[d as usize];
        if z == NONE {
            0
        } else {
            let s = la as u64 + z as u64;
            self.exp[(s % n as u64) as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 || self.p() == 2 {
            return a;
        }
        let s = self.log[a as usize] as u64 + self.neg_one_log as u64;
        self.exp[(s % self.units() as u64) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % self.units() as u64) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.units();
        let la = self.log[a as usize];
        Ok(self.exp[((n - la) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.units() as u64;
        let s = (self.log[a as usize] as u64 % n) * (e % n) % n;
        self.exp[s as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: u32) -> u64 {
        let n = self.units() as u64;
        n / crate::numthy::gcd(self.log(a) as u128, n as u128) as u64
    }

    /// The element of F_p with integer value `k`.
    pub fn from_int(&self, k: i64) -> u32 {
        (k.rem_euclid(self.p() as i64)) as u32
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

impl FieldArith for Gf {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        Gf::add(self, *a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        Gf::sub(self, *a, *b)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        Gf::mul(self, *a, *b)
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        Gf::inv(self, *a).ok()
    }
    fn size(&self) -> u128 {
        self.q as u128
    }
    fn from_index(&self, i: u128) -> u32 {
        (i % self.q as u128) as u32
    }
}
