#include "lpres/fixtures.hpp"

namespace lpres::fixtures {

const std::string_view lysenok_lpres = R"(# First Grigorchuk group (Lysenok)
[lpres]
gens = a, b, c, d
fixed = a^2; b^2; c^2; d^2; b*c*d
seeds = (a*d)^4; (a*d*a*c*a*c)^4
endo sigma = a -> a*c*a, b -> d, c -> b, d -> c
)";

const std::string_view remark3_pres = R"(# BS(1,2) x BS(1,2), mapped onto Z by t, u -> 1
[group]
gens = a, b, t, u
deg = a:0, b:0, t:1, u:1
rels = [a,b]; [a,u]; [t,b]; [t,u]; a^t*a^-2; b^u*b^-2
)";

// Base generators after normalization: a, b and u_t = u*t^-1.
// a@3 = a@2^2, a@-3 = (a@-2)^(u_t@0), while b@i = b and u_t@i = u_t.
const std::string_view remark3_certs = R"([certs]
gens = a, b, u_t
N = 2
up a = a@2^2
down a = a@-2^u_t@0
up b = b@2
down b = b@-2
up u_t = u_t@2
down u_t = u_t@-2
)";

const std::string_view remark3_lpres = R"(# kernel <a, b, z> of BS(1,2)^2 -> Z, z = t*u^-1
[lpres]
gens = a, b, z
seeds = [a,b]; a^z*a^-2; (b^2)^z*b^-1
endo eta = a -> a^2, b -> b, z -> z
endo tau = a -> z*a*z^-1, b -> b, z -> z
)";

const std::string_view remark3_map = R"([map]
stable = t
u_t@i = u*t^-1
z = t*u^-1

# x -> 2^k*x + q per factor
[dyadic]
a = (0, 1), (0, 0)
b = (0, 0), (0, 1)
t = (-1, 0), (0, 0)
u = (0, 0), (-1, 0)
)";

const std::string_view z2_pres = R"([group]
gens = a, t
deg = a:0, t:1
rels = [a,t]
)";

const std::string_view z2_certs = R"([certs]
gens = a
N = 1
up a = a@1
down a = a@-1
)";

const std::string_view bs12_pres = R"([group]
gens = a, t
deg = a:0, t:1
rels = a^t*a^-2
)";

std::vector<File> demo_files(std::string_view name) {
  if (name == "lysenok") return {{"lysenok.lpres", std::string(lysenok_lpres)}};
  if (name == "remark3")
    return {{"remark3.pres", std::string(remark3_pres)},
            {"remark3.certs", std::string(remark3_certs)},
            {"remark3.lpres", std::string(remark3_lpres)},
            {"remark3.map", std::string(remark3_map)}};
  if (name == "z2") return {{"z2.pres", std::string(z2_pres)}, {"z2.certs", std::string(z2_certs)}};
  return {};
}

std::string demo_commands(std::string_view name) {
  if (name == "lysenok")
    return "lpres expand lysenok.lpres --depth 3\n"
           "lpres verify lysenok.lpres --oracle grigorchuk --depth 6\n";
  if (name == "remark3")
    return "lpres derive remark3.pres --t t --certs remark3.certs --out remark3.derived.lpres\n"
           "lpres verify remark3.derived.lpres --oracle dyadic --depth 5 --pullback remark3.map\n"
           "lpres verify remark3.lpres --oracle dyadic --depth 8 --pullback remark3.map\n"
           "lpres hnn remark3.lpres\n";
  if (name == "z2")
    return "lpres derive z2.pres --t t --certs z2.certs --out z2.lpres\n"
           "lpres expand z2.lpres --depth 2\n";
  return {};
}

}  // namespace lpres::fixtures
