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

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rrcode/agcode.hpp"
#include "rrcode/curve.hpp"
#include "rrcode/funcfield.hpp"

namespace rrcode {

/// A parsed and validated job file. Grammar (one directive per line, '#'
/// starts a comment, tokens are whitespace-separated):
///
///   field p=<int> t=<int> [mod=<c0,c1,...>]
///   curve f=<c0,c1,...> h=<c0,...> [singular_ok]
///   divisor (<a>,<b>)*<m> ... inf*<m>
///   kappa <c0,c1,...>
///   g (<a>,<b>) (<a>,<b>) ...
///   cmd <basis|encode|distance|dim|points|fitcurve> [--oracle]
///       [shift=<elem>] [exps=<lo>,<hi>]
///
/// Extension-field constants use the "[d0,d1]" element syntax. The shift/exps
/// options apply to fitcurve only, which reads its samples from the g line
/// and needs no curve.
struct JobSpec {
    Field field = Field::make(2, 1);
    std::optional<Curve> curve;
    bool singular_ok = false;
    Divisor divisor;
    std::optional<Poly> kappa;
    std::vector<Point> gpoints;
    std::string command;
    bool oracle = false;
    std::optional<FieldElement> fit_shift;
    int fit_elo = 0, fit_ehi = 0;

    friend bool operator==(const JobSpec& a, const JobSpec& b);
    friend bool operator!=(const JobSpec& a, const JobSpec& b) { return !(a == b); }
};

/// Throws ParseError (syntax) and SemanticError (content), both carrying the
/// offending line.
JobSpec parse_jobspec(const std::string& text);

/// Canonical textual form; parse(render(job)) == job.
std::string render(const JobSpec& job);

/// Executes the job, writing the report to `out`. Output is byte-identical
/// across runs for identical input. Throws on domain errors.
void run_job(const JobSpec& job, std::ostream& out);

}  // namespace rrcode
