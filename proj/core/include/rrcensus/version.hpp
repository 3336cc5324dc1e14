#pragma once

#define RRCENSUS_VERSION_MAJOR 0
#define RRCENSUS_VERSION_MINOR 1
#define RRCENSUS_VERSION_PATCH 0
#define RRCENSUS_VERSION "0.1.0"
