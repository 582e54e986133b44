#pragma once

#define MCOP_VERSION "1.0.0"
