//! Schur functions in the power-sum basis, Jacobi–Trudi specializations of
//! (skew) Schur functions, and the cut-and-join operator.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::characters::chi;
use crate::kernel::{LaurentPoly, Rational, RationalFunction, Ring};
use crate::partitions::{enumerate, Partition};

/// Polynomial in power sums, `Σ c_μ p_μ` with `p_μ = Π p_{μ_i}`.
#[derive(Clone, PartialEq)]
pub struct PPolynomial<C> {
    terms: BTreeMap<Partition, C>,
}

impl<C: Ring> Default for PPolynomial<C> {
    fn default() -> Self {
        PPolynomial { terms: BTreeMap::new() }
    }
}

impl<C: Ring> PPolynomial<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(mu: Partition, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(mu, &c);
        p
    }

    pub fn add_term(&mut self, mu: Partition, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(x) => {
                let sum = x.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&mu);
                } else {
                    *x = sum;
                }
            }
            None => {
                self.terms.insert(mu, c.clone());
            }
        }
    }

    pub fn coeff(&self, mu: &Partition) -> C {
        self.terms.get(mu).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }

    pub fn scale_by(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (mu, x) in &self.terms {
            out.add_term(mu.clone(), &(x.clone() * c));
        }
        out
    }

    /// Product in the monomial algebra: `p_μ p_ν = p_{μ ∪ ν}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), &(ca.clone() * cb));
            }
        }
        out
    }

    /// Apply the cut-and-join operator
    /// `½ Σ_{i,j≥1} [(i+j) p_i p_j ∂/∂p_{i+j} + ij p_{i+j} ∂²/∂p_i∂p_j]`.
    pub fn cut_join(&self) -> Self {
        let mut out = Self::zero();
        for (mu, c) in &self.terms {
            for (nu, r) in cut_join_monomial(mu) {
                out.add_term(nu, &c.scale(&r));
            }
        }
        out
    }
}

pub fn cut_join_apply<C: Ring>(e: &PPolynomial<C>) -> PPolynomial<C> {
    e.cut_join()
}

/// Image of a single monomial `p_μ` under the cut-and-join operator, as a
/// map `ν → coefficient of p_ν`.
///
/// With the sum over ordered pairs `(i, j)`, cutting a part `k` into
/// `(i, k−i)` contributes `k/2` per position and per `i`; joining two parts
/// at distinct positions `a < b` contributes `μ_a μ_b`.
pub fn cut_join_monomial(mu: &Partition) -> BTreeMap<Partition, Rational> {
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    let mut push = |nu: Partition, r: Rational| {
        let slot = out.entry(nu).or_insert_with(Rational::zero);
        *slot = slot.clone() + &r;
    };
    let parts = mu.parts();
    for (a, &k) in parts.iter().enumerate() {
        if k < 2 {
            continue;
        }
        let mut rest = parts.to_vec();
        rest.remove(a);
        for i in 1..k {
            let mut next = rest.clone();
            next.push(i);
            next.push(k - i);
            push(Partition::from_multiset(next).expect("positive parts"), Rational::new(k as i64, 2));
        }
    }
    for a in 0..parts.len() {
        for b in (a + 1)..parts.len() {
            let mut next: Vec<usize> =
                parts.iter().enumerate().filter(|&(i, _)| i != a && i != b).map(|(_, &x)| x).collect();
            next.push(parts[a] + parts[b]);
            push(Partition::from_multiset(next).expect("positive parts"), Rational::from_int((parts[a] * parts[b]) as i64));
        }
    }
    out.retain(|_, r| !r.is_zero());
    out
}

/// `s_ν = Σ_{|μ|=|ν|} χ_ν(C_μ)/z_μ · p_μ`.
pub fn schur_in_p(nu: &Partition) -> PPolynomial<Rational> {
    let mut out = PPolynomial::zero();
    for mu in enumerate(nu.size()) {
        let c = chi(nu, &mu).expect("same size");
        out.add_term(mu.clone(), &Rational::new(c, mu.z() as i64));
    }
    out
}

/// Division-free determinant by Laplace expansion along rows, memoized on
/// the set of used columns. Exact over any commutative ring.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    assert!(n <= 20, "determinant expansion supports at most 20 rows");
    // minors[mask] = det of rows (n − popcount(mask))..n restricted to columns in mask.
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(R::one());
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = R::zero();
        let mut sign_pos = 0;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let minor = minors[mask & !(1 << col)].as_ref().expect("filled in increasing order");
                if !minor.is_zero() {
                    let term = entry.clone() * minor;
                    acc = if sign_pos % 2 == 0 { acc + &term } else { acc - &term };
                }
            }
            sign_pos += 1;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().expect("full minor")
}

/// `q`-Pochhammer `(q;q)_n = Π_{i=1}^{n} (1 − q^i)` as a polynomial in `v`, `q = v²`.
pub fn q_pochhammer(n: usize) -> LaurentPoly<Rational> {
    static CACHE: OnceLock<Mutex<Vec<LaurentPoly<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![LaurentPoly::one()]));
    let mut c = cache.lock().expect("pochhammer cache poisoned");
    while c.len() <= n {
        let i = c.len() as i64;
        let factor = LaurentPoly::from_terms([(0, Rational::one()), (2 * i, -Rational::one())]);
        let next = c.last().expect("seeded").clone() * &factor;
        c.push(next);
    }
    c[n].clone()
}

/// `(q;q)_a / (q;q)_b = Π_{i=b+1}^{a} (1 − q^i)` for `a ≥ b`.
fn pochhammer_ratio(a: usize, b: usize) -> LaurentPoly<Rational> {
    let mut out = LaurentPoly::one();
    for i in (b + 1)..=a {
        out = out * &LaurentPoly::from_terms([(0, Rational::one()), (2 * i as i64, -Rational::one())]);
    }
    out
}

/// `s_{ν/ρ}(1, q, q², …)` as a rational function in `v` with `q = v²`.
///
/// Jacobi–Trudi `det(h_{ν_i − ρ_j − i + j})` with `h_k = 1/(q;q)_k`. Row `i`
/// is multiplied by `(q;q)_{ν_i − i + L}` so that every entry becomes the
/// polynomial `(q;q)_{a_i}/(q;q)_{a_i − (ρ_j − j + L)}`; the determinant is
/// then taken over polynomials and the row factors divided out. Returns zero
/// when `ρ ⊄ ν`.
pub fn principal_spec(nu: &Partition, rho: &Partition) -> RationalFunction {
    if !rho.is_contained_in(nu) {
        return RationalFunction::zero();
    }
    let len = nu.len();
    if len == 0 {
        return RationalFunction::one();
    }
    let a: Vec<usize> = (0..len).map(|i| nu.part(i) + len - 1 - i).collect();
    let b: Vec<usize> = (0..len).map(|j| rho.part(j) + len - 1 - j).collect();
    let matrix: Vec<Vec<LaurentPoly<Rational>>> = a
        .iter()
        .map(|&ai| b.iter().map(|&bj| if ai >= bj { pochhammer_ratio(ai, ai - bj) } else { LaurentPoly::zero() }).collect())
        .collect();
    let det = determinant(&matrix);
    let den = a.iter().fold(LaurentPoly::one(), |acc, &ai| acc * &q_pochhammer(ai));
    RationalFunction::new(det, den).expect("nonzero denominator")
}

/// `s_{ν/ρ}(−q^{1/2}, −q^{3/2}, …) = (−v)^{|ν|−|ρ|} s_{ν/ρ}(1, q, …)` by homogeneity.
pub fn neg_half_spec(nu: &Partition, rho: &Partition) -> RationalFunction {
    let spec = principal_spec(nu, rho);
    if spec.is_zero() {
        return spec;
    }
    let k = (nu.size() - rho.size()) as i64;
    let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
    spec * &RationalFunction::x_pow(k).scale(&sign)
}

/// JSON form: `{"[2,1]": <coeff>, ...}`.
impl<C: Ring + Serialize> Serialize for PPolynomial<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (mu, c) in &self.terms {
            map.serialize_entry(&mu.to_string(), c)?;
        }
        map.end()
    }
}

impl<'de, C: Ring + DeserializeOwned> Deserialize<'de> for PPolynomial<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, C> = BTreeMap::deserialize(deserializer)?;
        let mut out = PPolynomial::zero();
        for (k, c) in raw {
            let mu: Partition = k.parse().map_err(serde::de::Error::custom)?;
            out.add_term(mu, &c);
        }
        Ok(out)
    }
}

impl<C: Ring> std::fmt::Debug for PPolynomial<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
