use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::octonion::Octonion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Particle {
    ElectronNeutrino,
    RedUpQuark,
    GreenUpQuark,
    BlueUpQuark,
    Electron,
    RedDownQuark,
    GreenDownQuark,
    BlueDownQuark,
}

impl fmt::Display for Particle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Particle::ElectronNeutrino => "e-neutrino",
            Particle::RedUpQuark => "red up quark",
            Particle::GreenUpQuark => "green up quark",
            Particle::BlueUpQuark => "blue up quark",
            Particle::Electron => "electron",
            Particle::RedDownQuark => "red down quark",
            Particle::GreenDownQuark => "green down quark",
            Particle::BlueDownQuark => "blue down quark",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Helicity {
    Weyl,
    Dirac,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FermionLabel {
    pub basis_index: usize,
    pub name: Particle,
    pub helicity_class: Helicity,
}

/// Particle assigned to each basis element, indexed by basis position.
const ASSIGNMENT: [Particle; 8] = [
    Particle::ElectronNeutrino,
    Particle::RedUpQuark,
    Particle::GreenUpQuark,
    Particle::RedDownQuark,
    Particle::Electron,
    Particle::GreenDownQuark,
    Particle::BlueUpQuark,
    Particle::BlueDownQuark,
];

pub fn fermion_label(index: usize) -> Result<FermionLabel> {
    let name = *ASSIGNMENT.get(index).ok_or_else(|| Error::Domain(format!("basis index {index} outside 0..=7")))?;
    let helicity_class = if index == 0 { Helicity::Weyl } else { Helicity::Dirac };
    Ok(FermionLabel { basis_index: index, name, helicity_class })
}

/// Direction of the charged part of a unit octonion; absent for a pure real input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    Unit(Octonion),
    /// `imaginary / sqrt(r_squared)` when the radius is irrational.
    OverRadical {
        imaginary: Octonion,
    },
    Undefined,
}

/// Split of a unit octonion into its neutrino-line amplitude and the squared
/// radius of the sphere of charged directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AmplitudeSplit {
    pub nu_amplitude: Rational,
    pub r_squared: Rational,
    pub direction: Direction,
}

pub fn split_amplitude(o: &Octonion) -> Result<AmplitudeSplit> {
    let n = o.norm();
    if n != Rational::ONE {
        return Err(Error::Normalization(format!("norm({o}) = {n}")));
    }
    let nu_amplitude = o.re().abs();
    let r_squared = Rational::ONE - o.re() * o.re();
    let direction = if r_squared.is_zero() {
        Direction::Undefined
    } else {
        match r_squared.sqrt_exact() {
            Some(r) => Direction::Unit(o.im().scale(r.recip())),
            None => Direction::OverRadical { imaginary: o.im() },
        }
    };
    Ok(AmplitudeSplit { nu_amplitude, r_squared, direction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::octonion::e;

    #[test]
    fn label_examples() {
        assert_eq!(fermion_label(4).unwrap().name, Particle::Electron);
        let nu = fermion_label(0).unwrap();
        assert_eq!((nu.name, nu.helicity_class), (Particle::ElectronNeutrino, Helicity::Weyl));
        assert_eq!(fermion_label(7).unwrap().name, Particle::BlueDownQuark);
        assert_eq!(fermion_label(6).unwrap().name, Particle::BlueUpQuark);
        assert_eq!(fermion_label(3).unwrap().name, Particle::RedDownQuark);
        assert!(matches!(fermion_label(8), Err(Error::Domain(_))));
    }

    #[test]
    fn charged_fermions_each_appear_once() {
        let mut names: Vec<Particle> = (1..8).map(|i| fermion_label(i).unwrap().name).collect();
        assert!((1..8).all(|i| fermion_label(i).unwrap().helicity_class == Helicity::Dirac));
        names.sort_by_key(|p| *p as u8);
        names.dedup();
        assert_eq!(names.len(), 7);
        assert!(!names.contains(&Particle::ElectronNeutrino));
    }

    #[test]
    fn split_examples() {
        let s = split_amplitude(&Octonion::ONE).unwrap();
        assert_eq!((s.nu_amplitude, s.r_squared, s.direction), (Rational::ONE, Rational::ZERO, Direction::Undefined));

        let s = split_amplitude(&e(4)).unwrap();
        assert_eq!((s.nu_amplitude, s.r_squared, s.direction), (Rational::ZERO, Rational::ONE, Direction::Unit(e(4))));

        let x = e(0).scale(Rational::new(3, 5)) + e(4).scale(Rational::new(4, 5));
        let s = split_amplitude(&x).unwrap();
        assert_eq!(s.nu_amplitude, Rational::new(3, 5));
        assert_eq!(s.r_squared, Rational::new(16, 25));
        assert_eq!(s.direction, Direction::Unit(e(4)));
        assert_eq!(s.nu_amplitude * s.nu_amplitude + s.r_squared, Rational::ONE);
    }

    #[test]
    fn split_rejects_non_unit() {
        assert!(matches!(split_amplitude(&(e(0) + e(1))), Err(Error::Normalization(_))));
    }

    #[test]
    fn irrational_radius_keeps_direction_symbolic() {
        let h = Rational::HALF;
        let x = e(0).scale(h) + e(1).scale(h) + e(2).scale(h) + e(3).scale(h);
        let s = split_amplitude(&x).unwrap();
        assert_eq!(s.r_squared, Rational::new(3, 4));
        assert_eq!(s.direction, Direction::OverRadical { imaginary: x.im() });
    }

    #[test]
    fn negative_real_part_uses_magnitude() {
        let x = e(0).scale(Rational::new(-5, 13)) + e(2).scale(Rational::new(12, 13));
        let s = split_amplitude(&x).unwrap();
        assert_eq!(s.nu_amplitude, Rational::new(5, 13));
        assert_eq!(s.r_squared, Rational::new(144, 169));
    }
}
