use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::entropy::ENUMERATION_LIMIT;
use crate::alloc::Allocation;
use crate::error::{Error, Result};
use crate::tans;

/// `RE(p) = max_{w ∈ S*_p} C̃(w, 0) / |S*_p|`, where `S*_p` holds every word
/// (the empty word included) whose symbol probabilities multiply to at
/// least `p`.
///
/// `S*_p` is closed under dropping the first symbol, so it is enumerated by
/// prepending symbols depth-first and pruning as soon as the product falls
/// below `p`.
pub fn relative_excess(alloc: &Allocation, p: Ratio<u64>) -> Result<Ratio<BigUint>> {
    if p.numer().is_zero() || p > Ratio::one() {
        return Err(Error::Format(format!("probability {p} outside (0, 1]")));
    }
    let mut walk = Walk {
        alloc,
        p_num: BigUint::from(*p.numer()),
        p_den: BigUint::from(*p.denom()),
        q: BigUint::from(alloc.period()),
        words: 0,
        max: BigUint::zero(),
    };
    walk.visit(&BigUint::zero(), &BigUint::one(), &BigUint::one())?;
    Ok(Ratio::new(walk.max, BigUint::from(walk.words)))
}

struct Walk<'a> {
    alloc: &'a Allocation,
    p_num: BigUint,
    p_den: BigUint,
    q: BigUint,
    words: u128,
    max: BigUint,
}

impl Walk<'_> {
    /// `state = C̃(w, 0)`, `prod_num / prod_den = Π f(s_i)` for the current `w`.
    fn visit(&mut self, state: &BigUint, prod_num: &BigUint, prod_den: &BigUint) -> Result<()> {
        self.words += 1;
        if self.words > ENUMERATION_LIMIT {
            return Err(Error::EnumerationTooLarge(self.words));
        }
        if *state > self.max {
            self.max = state.clone();
        }
        let den = prod_den * &self.q;
        for s in 0..self.alloc.freq().len() {
            let num = prod_num * self.alloc.freq().count(s);
            if &num * &self.p_den < &self.p_num * &den {
                continue;
            }
            let next = tans::encode_big(self.alloc, s, state) + 1u32;
            self.visit(&next, &num, &den)?;
        }
        Ok(())
    }
}
