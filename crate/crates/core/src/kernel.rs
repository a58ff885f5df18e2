use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{choose, gessel, half_super_catalan, super_catalan, Error, ExactInt, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KernelFamily {
    /// `(-1)^k`
    Plain,
    /// `(-1)^k binom(a+k, k) binom(a+n-k, n-k)`
    Rising,
    /// `(-1)^k binom(2k, k) binom(2(n-k), n-k)`
    Central,
    /// `(-1)^k S(k,r) S(n-k,r)`
    SuperCatalan,
    /// `(-1)^k (S(k,r)/2) (S(n-k,r)/2)`
    HalfSuperCatalan,
    /// `(-1)^k P(k,r) P(n-k,r)`
    Gessel,
    /// Explicit `(n, k, a)` table.
    Custom,
}

impl KernelFamily {
    pub const BUILTIN: [KernelFamily; 6] = [
        KernelFamily::Plain,
        KernelFamily::Rising,
        KernelFamily::Central,
        KernelFamily::SuperCatalan,
        KernelFamily::HalfSuperCatalan,
        KernelFamily::Gessel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelFamily::Plain => "plain",
            KernelFamily::Rising => "rising",
            KernelFamily::Central => "central",
            KernelFamily::SuperCatalan => "supercat",
            KernelFamily::HalfSuperCatalan => "half-supercat",
            KernelFamily::Gessel => "gessel",
            KernelFamily::Custom => "custom",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            KernelFamily::Plain,
            KernelFamily::Rising,
            KernelFamily::Central,
            KernelFamily::SuperCatalan,
            KernelFamily::HalfSuperCatalan,
            KernelFamily::Gessel,
            KernelFamily::Custom,
        ]
        .into_iter()
        .find(|f| f.name() == name)
    }

    pub fn has_order(self) -> bool {
        matches!(
            self,
            KernelFamily::SuperCatalan | KernelFamily::HalfSuperCatalan | KernelFamily::Gessel
        )
    }
}

/// Explicit kernel values keyed by `(n, k, a)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CustomTable {
    values: BTreeMap<(u64, u64, u64), ExactInt>,
}

impl CustomTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, n: u64, k: u64, a: u64, value: ExactInt) {
        self.values.insert((n, k, a), value);
    }

    pub fn get(&self, n: u64, k: u64, a: u64) -> Option<&ExactInt> {
        self.values.get(&(n, k, a))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Fills every `0 <= k <= n <= n_max`, `a <= a_max` from `f`.
    pub fn from_fn(
        n_max: u64,
        a_max: u64,
        mut f: impl FnMut(u64, u64, u64) -> Result<ExactInt>,
    ) -> Result<Self> {
        let mut table = CustomTable::new();
        for n in 0..=n_max {
            for k in 0..=n {
                for a in 0..=a_max {
                    table.insert(n, k, a, f(n, k, a)?);
                }
            }
        }
        Ok(table)
    }

    /// Values drawn uniformly from `[-9, 9]`, in ascending `(n, k, a)` order.
    pub fn random(seed: u64, n_max: u64, a_max: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::from_fn(n_max, a_max, |_, _, _| {
            Ok(ExactInt::from(rng.gen_range(-9i64..=9)))
        })
        .expect("infallible generator")
    }

    /// `H(n,k,a) = binom(a+k, a) binom(a+n-k, a) G(n,k,a)` for every entry
    /// `G` can produce up to `n_max`, `a_max`.
    pub fn transplanted(g: &SummandKernel, n_max: u64, a_max: u64) -> Result<Self> {
        Self::from_fn(n_max, a_max, |n, k, a| {
            Ok(choose(a + k, a) * choose(a + n - k, a) * g.eval(n, k, a)?)
        })
    }
}

/// Adds `delta` to the kernel value at one `(n, k)` point, for every `a`.
///
/// Test hook for fault-injection runs of the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perturbation {
    pub n: u64,
    pub k: u64,
    pub delta: i64,
}

/// Integer-valued summand `F(n, k, a)` plugged into generic sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandKernel {
    family: KernelFamily,
    order: Option<u64>,
    table: Option<Arc<CustomTable>>,
    perturbation: Option<Perturbation>,
}

impl SummandKernel {
    fn builtin(family: KernelFamily, order: Option<u64>) -> Self {
        SummandKernel {
            family,
            order,
            table: None,
            perturbation: None,
        }
    }

    fn ordered(family: KernelFamily, r: u64) -> Self {
        assert!(r >= 1, "{} kernel needs order r >= 1", family.name());
        Self::builtin(family, Some(r))
    }

    pub fn plain() -> Self {
        Self::builtin(KernelFamily::Plain, None)
    }

    pub fn rising() -> Self {
        Self::builtin(KernelFamily::Rising, None)
    }

    pub fn central() -> Self {
        Self::builtin(KernelFamily::Central, None)
    }

    /// Panics if `r == 0`; likewise for the other ordered families.
    pub fn super_catalan(r: u64) -> Self {
        Self::ordered(KernelFamily::SuperCatalan, r)
    }

    pub fn half_super_catalan(r: u64) -> Self {
        Self::ordered(KernelFamily::HalfSuperCatalan, r)
    }

    pub fn gessel(r: u64) -> Self {
        Self::ordered(KernelFamily::Gessel, r)
    }

    pub fn custom(table: impl Into<Arc<CustomTable>>) -> Self {
        SummandKernel {
            family: KernelFamily::Custom,
            order: None,
            table: Some(table.into()),
            perturbation: None,
        }
    }

    /// Builds a kernel of `family`; `order` is required for the ordered
    /// families and ignored otherwise. Returns `None` for `Custom` or a
    /// missing/zero order.
    pub fn of_family(family: KernelFamily, order: Option<u64>) -> Option<Self> {
        match family {
            KernelFamily::Plain => Some(Self::plain()),
            KernelFamily::Rising => Some(Self::rising()),
            KernelFamily::Central => Some(Self::central()),
            KernelFamily::Custom => None,
            f => order.filter(|&r| r >= 1).map(|r| Self::ordered(f, r)),
        }
    }

    pub fn with_perturbation(mut self, p: Perturbation) -> Self {
        self.perturbation = Some(p);
        self
    }

    pub fn family(&self) -> KernelFamily {
        self.family
    }

    pub fn order(&self) -> Option<u64> {
        self.order
    }

    pub fn name(&self) -> String {
        match self.order {
            Some(r) => format!("{}({r})", self.family.name()),
            None => String::from(self.family.name()),
        }
    }

    pub fn eval(&self, n: u64, k: u64, a: u64) -> Result<ExactInt> {
        if k > n {
            return Err(Error::KernelDomain { n, k });
        }
        let mut value = self.eval_unperturbed(n, k, a)?;
        if let Some(p) = self.perturbation {
            if p.n == n && p.k == k {
                value += p.delta;
            }
        }
        Ok(value)
    }

    fn eval_unperturbed(&self, n: u64, k: u64, a: u64) -> Result<ExactInt> {
        let r = self.order.unwrap_or(1);
        let magnitude = match self.family {
            KernelFamily::Plain => ExactInt::from(1),
            KernelFamily::Rising => choose(a + k, k) * choose(a + n - k, n - k),
            KernelFamily::Central => choose(2 * k, k) * choose(2 * (n - k), n - k),
            KernelFamily::SuperCatalan => super_catalan(k, r)? * super_catalan(n - k, r)?,
            KernelFamily::HalfSuperCatalan => {
                half_super_catalan(k, r)? * half_super_catalan(n - k, r)?
            }
            KernelFamily::Gessel => gessel(k, r)? * gessel(n - k, r)?,
            KernelFamily::Custom => {
                let table = self.table.as_ref().expect("custom kernel carries a table");
                return table
                    .get(n, k, a)
                    .cloned()
                    .ok_or(Error::TableMiss { n, k, a });
            }
        };
        Ok(if k % 2 == 1 { -magnitude } else { magnitude })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn builtin_values() {
        assert_eq!(SummandKernel::plain().eval(5, 3, 0).unwrap(), int(-1));
        // binom(2+1,1) binom(2+3,3) = 3 * 10
        assert_eq!(SummandKernel::rising().eval(4, 1, 2).unwrap(), int(-30));
        // binom(4,2) binom(2,1)
        assert_eq!(SummandKernel::central().eval(3, 2, 0).unwrap(), int(12));
        // S(1,1) S(1,1) = 4, k odd
        assert_eq!(
            SummandKernel::super_catalan(1).eval(2, 1, 0).unwrap(),
            int(-4)
        );
        assert_eq!(
            SummandKernel::half_super_catalan(1).eval(2, 1, 0).unwrap(),
            int(-1)
        );
        // P(1,2) P(0,2) = 4 * 3
        assert_eq!(SummandKernel::gessel(2).eval(1, 1, 1).unwrap(), int(-12));
    }

    #[test]
    fn custom_table_and_miss() {
        let mut t = CustomTable::new();
        t.insert(2, 1, 0, int(7));
        let k = SummandKernel::custom(t);
        assert_eq!(k.eval(2, 1, 0).unwrap(), int(7));
        assert_eq!(k.eval(2, 0, 0), Err(Error::TableMiss { n: 2, k: 0, a: 0 }));
        assert_eq!(k.eval(1, 2, 0), Err(Error::KernelDomain { n: 1, k: 2 }));
    }

    #[test]
    fn random_tables_are_reproducible_and_bounded() {
        let a = CustomTable::random(0x5EED, 6, 2);
        let b = CustomTable::random(0x5EED, 6, 2);
        let c = CustomTable::random(0x5EEE, 6, 2);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 28 * 3);
        assert!(a.values.values().all(|v| *v >= int(-9) && *v <= int(9)));
    }

    #[test]
    fn perturbation_hits_one_point() {
        let k = SummandKernel::plain().with_perturbation(Perturbation {
            n: 4,
            k: 1,
            delta: 1,
        });
        assert_eq!(k.eval(4, 1, 0).unwrap(), int(0));
        assert_eq!(k.eval(4, 1, 3).unwrap(), int(0));
        assert_eq!(k.eval(4, 2, 0).unwrap(), int(1));
        assert_eq!(k.eval(3, 1, 0).unwrap(), int(-1));
    }

    #[test]
    fn family_names_round_trip() {
        for f in KernelFamily::BUILTIN {
            assert_eq!(KernelFamily::from_name(f.name()), Some(f));
        }
        assert_eq!(SummandKernel::gessel(3).name(), "gessel(3)");
        assert!(SummandKernel::of_family(KernelFamily::Gessel, None).is_none());
    }
}
