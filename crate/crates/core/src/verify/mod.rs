//! Identity checkers. Each returns a [`CheckReport`] comparing two sides
//! coefficient by coefficient inside the window that truncation leaves exact.

mod bilinear;
mod equations;
mod oracle;
mod remark1;
mod report;

pub use bilinear::{check_hirota, check_kp_bilinear, check_toda, Gauge};
pub use equations::{check_ode, check_prop4, check_prop4_qb, check_qdiff, check_qdiff_qa};
pub use oracle::{det_oracle_tau, OracleResult};
pub use remark1::{check_remark1, Remark1Mode};
pub use report::{CheckReport, Failure};
