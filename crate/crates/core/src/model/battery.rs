//! A fixed set of closed sentences used to compare a model with its dual.
//! They are picked to cover the three sorts and both membership relations,
//! not for being true.

use crate::syntax::{parse_formula, Formula};

pub const BATTERY: [&str; 20] = [
    // null set and null sed
    "(exists X (forall Y (not (mem Y X))))",
    "(exists X (forall Y (not (dmem Y X))))",
    "(exists (x set) (forall (y set) (not (mem y x))))",
    "(exists (x sed) (forall (y sed) (not (dmem y x))))",
    // complements
    "(forall X (iff (mem X X) (not (mem X (comp X)))))",
    "(forall X (exists Y (and (not (= X Y)) (= Y (comp X)))))",
    "(forall (x set) (exists (y sed) (= y (comp x))))",
    "(forall (x sed) (exists (y set) (= (comp y) x)))",
    // pairing-shaped
    "(forall (x set) (forall (y set) (exists (z set) (and (mem x z) (mem y z)))))",
    "(forall (x sed) (forall (y sed) (exists (z sed) (and (dmem x z) (dmem y z)))))",
    "(forall X (forall Y (exists Z (forall U (iff (mem U Z) (or (= U X) (= U Y)))))))",
    // regularity-shaped
    "(forall X (imp (exists Y (mem Y X)) (exists (y set) (and (mem y X) (forall Z (imp (mem Z y) (not (mem Z X))))))))",
    "(forall X (imp (exists Y (dmem Y X)) (exists (y sed) (and (dmem y X) (forall Z (imp (dmem Z y) (not (dmem Z X))))))))",
    // extensionality and quantifier mixes
    "(forall X (forall Y (imp (forall Z (iff (mem Z X) (mem Z Y))) (= X Y))))",
    "(forall X (forall Y (imp (forall Z (iff (dmem Z X) (dmem Z Y))) (= X Y))))",
    "(exists (x set) (exists (y sed) (and (mem x y) (dmem y x))))",
    "(forall X (exists (y sed) (or (mem X y) (dmem X y))))",
    "(existsUnique X (forall Y (mem Y X)))",
    "(forall (x set) (forall (y sed) (iff (mem x y) (dmem (comp x) (comp y)))))",
    "(exists X (and (mem X X) (dmem X X)))",
];

pub fn battery() -> Vec<Formula> {
    BATTERY.iter().map(|s| parse_formula(s).expect("battery formula parses")).collect()
}
