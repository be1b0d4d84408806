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

#ifndef ACCREDIT_CHANNEL_IO_H
#define ACCREDIT_CHANNEL_IO_H

#include <string>
#include <string_view>

#include "accredit/channel.h"

namespace accredit {

// A channel is either a preset string ("identity", "bitflip:q",
// "depolarizing:p") or a raw Kraus object
//
//   {"arity": 1, "kraus": [ [[[re,im],[re,im]], [[re,im],[re,im]]], ... ]}
//
// where each Kraus operator is a list of rows of [re, im] pairs.

NoiseChannel parse_channel(std::string_view text);
/// Raw Kraus form; always lossless.
std::string serialize_channel(const NoiseChannel &ch);

/// A list is a JSON array whose entries are preset strings or raw objects.
CptpList parse_cptp_list(std::string_view text);
std::string serialize_cptp_list(const CptpList &list);

}  // namespace accredit

#endif
