// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gk {

// 12 significant digits, locale independent; "inf", "-inf", "nan" for specials.
std::string format_number(double v);

// RFC 4180 quoting when the field needs it.
std::string csv_escape(std::string_view field);
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace gk
