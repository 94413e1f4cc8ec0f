//! Worked examples of the bijection and of the repeat statistic, checked
//! value by value.

mod common;

use common::*;

#[test]
fn twisted_d5_chain_of_single_boxes() {
    check_twisted_d5().unwrap();
}

#[test]
fn twisted_a5_chain_with_a_column_of_height_two() {
    check_twisted_a5().unwrap();
}

#[test]
fn xi_of_the_a4_tableau() {
    check_a4_xi_psi().unwrap();
}

#[test]
fn psi_of_the_a3_configuration() {
    check_a3_psi().unwrap();
}

#[test]
fn repeat_statistic_of_the_a4_example() {
    check_rpt_example().unwrap();
}
