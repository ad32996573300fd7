pub mod error;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{ArithOp, Elem, Enumeration, Ring, RingKind};
pub mod matrix;
pub use matrix::Matrix;
pub mod normal_forms;
pub use normal_forms::{Hnf, KernelModule, Snf, SolutionStream, TupleCursor};
pub mod groups;
pub use groups::{BilinearForm, FormKind, GeneratorWord, GroupKind};
pub mod witnesses;
pub use witnesses::{StabilizerContext, TphiWitness};
pub mod suites;
pub use suites::{run_suite, SuiteParams, Verdict, WitnessReport, SUITES};
