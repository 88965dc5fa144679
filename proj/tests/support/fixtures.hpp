#pragma once

#include <filesystem>
#include <string>

#include "opmine/edb.hpp"
#include "opmine/survey.hpp"

// Shared test data.
namespace opmine::testing {

// Frozen expected values, produced by hand/oracle evaluation of the
// definitions (see tests for the derivations they anchor).
inline constexpr double kCommitment1121 = 0.8267949192431123;   // 1 - sqrt(0.03)
inline constexpr double kCommitment1222 = 0.5641101056459328;   // 1 - sqrt(0.19)
inline constexpr double kSupportPair = 0.7332016846208762;      // {m11,m12} on the treatments db
inline constexpr double kSupportM11 = 0.9133974596215562;
inline constexpr double kSupportM12 = 0.7820550528229664;
inline constexpr double kCommitmentStep = 0.2254033307585166;   // 1 - sqrt(0.6), one 0.2 discount step
inline constexpr double kSupportQ3High = 0.4046187874106394;    // (4 + 2*(1-sqrt(0.6)))/11
inline constexpr double kSupportQ1Moderate = 0.2932184846144106;  // (3 + (1-sqrt(0.6)))/11
inline constexpr double kSupportBestCoverage = 0.09552787831973028;  // (1 + (1-sqrt(0.6))^2)/11
inline constexpr double kPositivityBest = 0.5625;

/// The two-practitioner, two-treatment example database: frames
/// {Good, Average, Bad}, row P1 = {m11, m12}, row P2 = {m21, m22}.
EvidentialDatabase treatments_db();

const MassFunction& treatments_m11();
const MassFunction& treatments_m12();
const MassFunction& treatments_m21();
const MassFunction& treatments_m22();

/// Bundled survey sample (11 experts, 4 questions, source S1).
std::filesystem::path data_dir();
std::filesystem::path s1_csv_path();
SurveyData s1_survey();
EvidentialDatabase s1_db();

}  // namespace opmine::testing
