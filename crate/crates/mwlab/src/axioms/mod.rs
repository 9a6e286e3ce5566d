//! Executable axioms: instance checkers, bounded search, and the
//! rule-by-axiom verification table.

pub mod checks;
pub mod enumerate;
pub mod search;
pub mod table;
