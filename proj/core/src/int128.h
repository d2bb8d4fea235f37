#pragma once

namespace gendiff::detail {

__extension__ typedef __int128 Int128;

}  // namespace gendiff::detail
