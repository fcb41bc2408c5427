#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sdist/bounds.hpp"
#include "sdist/certificate.hpp"
#include "sdist/configuration.hpp"
#include "sdist/search.hpp"

namespace sdist::report {

// Tab-separated bounds table with a header row.
std::string bounds_tsv(const std::vector<BoundsReport>& rows);
nlohmann::json bounds_json(const std::vector<BoundsReport>& rows);

std::string profile_text(const PointConfiguration& config, const InnerProductProfile& prof);
nlohmann::json profile_json(const PointConfiguration& config, const InnerProductProfile& prof);

std::string certificate_text(const Certificate& cert, const CheckReport& report);
nlohmann::json certificate_json(const Certificate& cert, const CheckReport& report);

std::string search_text(const SearchResult& result);

std::string format_double(double x);

}  // namespace sdist::report
