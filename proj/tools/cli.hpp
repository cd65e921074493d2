#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "sb/gamma.hpp"

namespace sb {

enum ExitCode { kOk = 0, kValidation = 2, kDomain = 3, kCheckFailed = 4 };

nlohmann::ordered_json gm_json(const GammaMonomial& g);
nlohmann::ordered_json gs_json(const GammaSum& s);

const std::vector<std::string>& sweep_columns();

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sb
