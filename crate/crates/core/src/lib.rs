pub mod chains;
pub mod error;
pub mod groebner;
pub mod hankel;
pub mod ideals;
pub mod polyring;
pub mod report;
pub mod straighten;

pub use error::{BudgetLog, Error, Result};
