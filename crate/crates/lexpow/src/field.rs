//! The coefficient field of a Betti computation, identified by its
//! characteristic.  Minimal resolutions of monomial ideals depend on the
//! field only through the characteristic, so nothing more is stored.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Field {
    characteristic: u32,
}

impl Field {
    /// Characteristic zero (exact integer arithmetic).
    pub const RATIONALS: Field = Field { characteristic: 0 };

    pub fn new(characteristic: u32) -> Self {
        assert!(
            characteristic == 0 || is_prime(characteristic),
            "characteristic must be 0 or prime, got {characteristic}"
        );
        Field { characteristic }
    }

    pub fn prime(p: u32) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        Field { characteristic: p }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::RATIONALS
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(101));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }

    #[test]
    #[should_panic]
    fn rejects_composite_characteristic() {
        Field::new(6);
    }
}
