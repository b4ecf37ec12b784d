use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

/// System size `n` and local dimension `d`, together with the fixed coset
/// representatives `π_k = (k, n−1)`, `π_{n−1} = e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingContext {
    pub n: usize,
    pub d: usize,
}

/// `X(χ_ab) = d^{scale_power} V(perm)` on `n−2` factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiResult {
    pub scale_power: u32,
    pub perm: Permutation,
}

impl EmbeddingContext {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("n must be at least 2, got {n}")));
        }
        if d < 1 {
            return Err(Error::Precondition("d must be at least 1".into()));
        }
        Ok(EmbeddingContext { n, d })
    }

    fn check_leg(&self, what: &'static str, k: usize) -> Result<()> {
        if k == 0 || k >= self.n {
            return Err(Error::IndexOutOfRange {
                what,
                value: k,
                min: 1,
                max: self.n - 1,
            });
        }
        Ok(())
    }

    fn check_degree(&self, p: &Permutation, want: usize) -> Result<()> {
        if p.degree() != want {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: want,
            });
        }
        Ok(())
    }

    /// `π_k` as an element of `S(m)`, `m ≥ n−1`.
    fn pi_in(&self, k: usize, m: usize) -> Permutation {
        let top = self.n - 1;
        if k == top {
            Permutation::identity(m)
        } else {
            Permutation::transposition(m, k, top).expect("leg already validated")
        }
    }

    /// `π_k ∈ S(n)`.
    pub fn pi(&self, k: usize) -> Result<Permutation> {
        self.check_leg("leg", k)?;
        Ok(self.pi_in(k, self.n))
    }

    fn swap_last_two(&self) -> Permutation {
        Permutation::transposition(self.n, self.n - 1, self.n).expect("n >= 2")
    }

    /// `f_ab(σ) = π_b ∘ σ ∘ (n n−1) ∘ π_a⁻¹` for `σ ∈ S(n−2)`.
    pub fn f_ab(&self, sigma: &Permutation, a: usize, b: usize) -> Result<Permutation> {
        self.check_leg("a", a)?;
        self.check_leg("b", b)?;
        self.check_degree(sigma, self.n - 2)?;
        let n = self.n;
        let s = sigma.extend(n);
        Ok(self
            .pi_in(b, n)
            .compose_unchecked(&s)
            .compose_unchecked(&self.swap_last_two())
            .compose_unchecked(&self.pi_in(a, n).inverse()))
    }

    /// Inverse of [`f_ab`](Self::f_ab): returns `(a, b, σ)` with
    /// `a = σ_ab⁻¹(n)` and `b = σ_ab(n)`.
    pub fn f_ab_inverse(&self, sigma_ab: &Permutation) -> Result<(usize, usize, Permutation)> {
        self.check_degree(sigma_ab, self.n)?;
        let n = self.n;
        let b = sigma_ab.apply(n);
        if b == n {
            return Err(Error::FixesN(sigma_ab.to_string()));
        }
        let a = sigma_ab.inverse().apply(n);
        let s = self
            .pi_in(b, n)
            .inverse()
            .compose_unchecked(sigma_ab)
            .compose_unchecked(&self.pi_in(a, n))
            .compose_unchecked(&self.swap_last_two());
        let sigma = s.restrict(n - 2)?;
        Ok((a, b, sigma))
    }

    /// `f_c(σ) = π_{σ(c)}⁻¹ ∘ σ ∘ π_c` for `σ ∈ S(n−1)`, restricted to `S(n−2)`.
    pub fn f_c(&self, sigma: &Permutation, c: usize) -> Result<Permutation> {
        self.check_leg("c", c)?;
        self.check_degree(sigma, self.n - 1)?;
        let m = self.n - 1;
        let s = self
            .pi_in(sigma.apply(c), m)
            .inverse()
            .compose_unchecked(sigma)
            .compose_unchecked(&self.pi_in(c, m));
        s.restrict(self.n - 2)
    }

    /// `χ_ab` for the transposition representatives.
    pub fn chi(&self, a: usize, b: usize) -> Result<ChiResult> {
        self.check_leg("a", a)?;
        self.check_leg("b", b)?;
        let m = self.n - 2;
        let top = self.n - 1;
        Ok(if a == b {
            ChiResult {
                scale_power: 1,
                perm: Permutation::identity(m),
            }
        } else if a == top || b == top {
            ChiResult {
                scale_power: 0,
                perm: Permutation::identity(m),
            }
        } else {
            ChiResult {
                scale_power: 0,
                perm: Permutation::transposition(m, a, b)?,
            }
        })
    }

    /// `χ_ab` from the representative-independent expression
    /// `(n n−1) ∘ π_a⁻¹ ∘ π_b ∘ (n−1 n x)` with `x = π_b⁻¹(a)`.
    pub fn chi_general(&self, a: usize, b: usize) -> Result<ChiResult> {
        self.check_leg("a", a)?;
        self.check_leg("b", b)?;
        let n = self.n;
        if a == b {
            return Ok(ChiResult {
                scale_power: 1,
                perm: Permutation::identity(n - 2),
            });
        }
        let pa = self.pi_in(a, n);
        let pb = self.pi_in(b, n);
        let x = pb.inverse().apply(a);
        let cycle = Permutation::from_cycles(n, &[vec![n - 1, n, x]])?;
        let chi = self
            .swap_last_two()
            .compose_unchecked(&pa.inverse())
            .compose_unchecked(&pb)
            .compose_unchecked(&cycle);
        Ok(ChiResult {
            scale_power: 0,
            perm: chi.restrict(n - 2)?,
        })
    }
}
