//! Singer difference set, the elliptic-quadric ovoid, Möbius planes and
//! their truncations, and executable checks of the circle lemmas.

mod anti;
mod difference;
mod lemmas;
mod ovoid;
mod plane;

pub use anti::{check_anti_cocircular, AntiCocircularReport};
pub use difference::{build_difference_set, DifferenceSet};
pub use lemmas::{run_lemma_suite, LemmaReport, LemmaResult};
pub use ovoid::{build_ovoid, Ovoid};
pub use plane::{
    build_full_plane, build_truncated_planes, circles_from_rows, circles_through_zero, MobiusPlane,
    PlaneVariant,
};

use crate::gf::FieldTower;
use crate::{Error, Result};

fn require_quartic(tower: &FieldTower) -> Result<()> {
    if tower.m() != 4 {
        return Err(Error::WrongTowerDegree {
            expected: 4,
            actual: tower.m(),
        });
    }
    Ok(())
}
