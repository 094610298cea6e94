#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lpres::fixtures {

struct File {
  std::string name;
  std::string text;
};

/// Lysenok's L-presentation of the first Grigorchuk group.
extern const std::string_view lysenok_lpres;

/// BS(1,2)² = ⟨a, b, t, u⟩ with t and u of degree 1.
extern const std::string_view remark3_pres;
/// Window certificates for the kernel of remark3_pres, N = 2.
extern const std::string_view remark3_certs;
/// The hand-simplified three-generator L-presentation of that kernel.
extern const std::string_view remark3_lpres;
/// Pullback rules and BS(1,2)² affine images for both remark3 forms.
extern const std::string_view remark3_map;

/// ℤ² = ⟨a, t | [a,t]⟩ and its N = 1 certificates.
extern const std::string_view z2_pres;
extern const std::string_view z2_certs;

/// BS(1,2) = ⟨a, t | a^t a^-2⟩. Its kernel ℤ[½] is not finitely generated.
extern const std::string_view bs12_pres;

/// Files written by `lpres demo <name>`; empty for unknown names.
std::vector<File> demo_files(std::string_view name);

/// Suggested commands to run after writing a demo.
std::string demo_commands(std::string_view name);

}  // namespace lpres::fixtures
