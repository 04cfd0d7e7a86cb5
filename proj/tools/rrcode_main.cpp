/*
   Copyright 2026 The rrcode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rrcode/errors.hpp"
#include "rrcode/jobspec.hpp"

namespace {

constexpr const char* kUsage =
    "usage: rrcode <jobfile>\n"
    "       rrcode -          read the job from stdin\n"
    "\n"
    "Runs one job file (line-oriented directives; see the README for the\n"
    "grammar). Commands: basis, encode, distance, dim, points, fitcurve.\n"
    "Exit status: 0 success, 1 domain error, 2 parse error.\n";

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2 || std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h") {
        std::cerr << kUsage;
        return argc == 2 ? 0 : 2;
    }

    std::string text;
    if (std::string(argv[1]) == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(argv[1]);
        if (!in) {
            std::cerr << "error[IO]: cannot open '" << argv[1] << "'\n";
            return 1;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    try {
        rrcode::JobSpec job = rrcode::parse_jobspec(text);
        rrcode::run_job(job, std::cout);
        return 0;
    } catch (const rrcode::ParseError& e) {
        std::cerr << "error[ParseError]: " << e.what() << "\n";
        return 2;
    } catch (const rrcode::Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error[Internal]: " << e.what() << "\n";
        return 1;
    }
}
