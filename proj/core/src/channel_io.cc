// Copyright 2026 The Accredit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "accredit/channel_io.h"

#include <charconv>
#include <stdexcept>

#include "json_util.h"

namespace accredit {

namespace {

using detail::json;

double parse_preset_parameter(std::string_view text, std::string_view preset) {
    double value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw std::invalid_argument("bad parameter for preset '" + std::string(preset) + "'.");
    }
    return value;
}

NoiseChannel preset_channel(std::string_view text) {
    if (text == "identity") {
        return NoiseChannel::identity(1);
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("unknown channel preset '" + std::string(text) + "'.");
    }
    auto name = text.substr(0, colon);
    double value = parse_preset_parameter(text.substr(colon + 1), name);
    if (name == "bitflip") {
        return NoiseChannel::bit_flip(value);
    }
    if (name == "depolarizing") {
        return NoiseChannel::depolarizing(value);
    }
    throw std::invalid_argument("unknown channel preset '" + std::string(name) + "'.");
}

NoiseChannel channel_from_json(const json &j) {
    if (j.is_string()) {
        return preset_channel(j.get<std::string>());
    }
    NoiseChannel ch;
    ch.arity = j.at("arity").get<int>();
    for (const auto &k : j.at("kraus")) {
        ch.kraus.push_back(detail::matrix_from_json(k));
    }
    if (!validate_channel(ch)) {
        throw std::invalid_argument("channel is not trace preserving.");
    }
    return ch;
}

json channel_to_json(const NoiseChannel &ch) {
    json kraus = json::array();
    for (const auto &k : ch.kraus) {
        kraus.push_back(detail::matrix_to_json(k));
    }
    return json{{"arity", ch.arity}, {"kraus", std::move(kraus)}};
}

}  // namespace

NoiseChannel parse_channel(std::string_view text) {
    auto first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && (text[first] == '{' || text[first] == '"')) {
        try {
            return channel_from_json(json::parse(text));
        } catch (const json::exception &e) {
            throw std::invalid_argument(std::string("malformed channel: ") + e.what());
        }
    }
    return preset_channel(text);
}

std::string serialize_channel(const NoiseChannel &ch) { return channel_to_json(ch).dump(); }

CptpList parse_cptp_list(std::string_view text) {
    try {
        CptpList list;
        for (const auto &entry : json::parse(text)) {
            list.channels.push_back(channel_from_json(entry));
        }
        return list;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed CPTP list: ") + e.what());
    }
}

std::string serialize_cptp_list(const CptpList &list) {
    json out = json::array();
    for (const auto &ch : list.channels) {
        out.push_back(channel_to_json(ch));
    }
    return out.dump();
}

}  // namespace accredit
